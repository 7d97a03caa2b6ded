//! Small helpers around [`BigRational`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn vec_of(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| int(v)).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn norm_squared(a: &[Rational]) -> Rational {
    dot(a, a)
}

/// Pairing of a rational character with an integer cocharacter.
pub fn pair_int(a: &[Rational], rho: &[BigInt]) -> Rational {
    debug_assert_eq!(a.len(), rho.len());
    a.iter().zip(rho).fold(Rational::zero(), |acc, (x, r)| {
        acc + x * Rational::from_integer(r.clone())
    })
}

pub fn is_zero_vec(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Scales a nonzero rational vector to the primitive integer vector pointing
/// the same way. Returns `None` for the zero vector.
pub fn primitive_direction(v: &[Rational]) -> Option<Vec<BigInt>> {
    if is_zero_vec(v) {
        return None;
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Some(ints.into_iter().map(|x| x / &gcd).collect())
}

/// Exact square root of a nonnegative rational, when it is rational.
pub fn exact_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Lossy decimal rendering for display only.
pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Parses `a`, `-a` or `a/b` into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn format_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(","))
}

fn parse_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Comma-separated rationals with byte offsets relative to `base`.
fn parse_row(text: &str, base: usize) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    let mut offset = base;
    for piece in text.split(',') {
        let value = parse_rational(piece)
            .ok_or_else(|| parse_error(offset, format!("expected a rational, found {:?}", piece.trim())))?;
        out.push(value);
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// `[(a,b,...),(c,d,...),...]`; brackets optional.
pub fn parse_vectors(text: &str) -> Result<Vec<Vec<Rational>>> {
    let mut points = Vec::new();
    let mut rest = 0;
    while let Some(open) = text[rest..].find('(').map(|i| i + rest) {
        let between = &text[rest..open];
        if between
            .chars()
            .any(|c| !(c.is_whitespace() || c == ',' || c == '['))
        {
            return Err(parse_error(rest, "unexpected text between points"));
        }
        let close = text[open..]
            .find(')')
            .map(|i| i + open)
            .ok_or_else(|| parse_error(open, "unclosed parenthesis"))?;
        points.push(parse_row(&text[open + 1..close], open + 1)?);
        rest = close + 1;
    }
    if text[rest..]
        .chars()
        .any(|c| !(c.is_whitespace() || c == ']' || c == ',' || c == '['))
    {
        return Err(parse_error(rest, "unexpected trailing text"));
    }
    if points.is_empty() {
        return Err(parse_error(0, "no points given"));
    }
    Ok(points)
}
