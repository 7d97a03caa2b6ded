//! Text syntax for polynomials: `x0*x2 - x1^2`, `3*x0^2*x1`, `1/2*x0 + x1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::rational::Rational;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    // (monomial exponents indexed by variable, coefficient)
    terms: Vec<(Vec<u32>, Rational)>,
}

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(start, "expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn polynomial(&mut self) -> Result<()> {
        self.skip_ws();
        let mut negative = false;
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            negative = c == b'-';
            self.pos += 1;
        }
        self.term(negative)?;
        loop {
            self.skip_ws();
            match self.peek() {
                None => return Ok(()),
                Some(c @ (b'+' | b'-')) => {
                    self.pos += 1;
                    self.term(c == b'-')?;
                }
                Some(c) => return Err(err(self.pos, format!("unexpected character '{}'", c as char))),
            }
        }
    }

    fn term(&mut self, negative: bool) -> Result<()> {
        let mut coef = if negative {
            -Rational::one()
        } else {
            Rational::one()
        };
        let mut exps: Vec<u32> = Vec::new();
        loop {
            self.skip_ws();
            let start = self.pos;
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let idx: usize = self
                        .digits()?
                        .parse()
                        .map_err(|_| err(start, "variable index too large"))?;
                    self.skip_ws();
                    let mut power = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        let at = self.pos;
                        power = self
                            .digits()?
                            .parse()
                            .map_err(|_| err(at, "exponent too large"))?;
                    }
                    if exps.len() <= idx {
                        exps.resize(idx + 1, 0);
                    }
                    exps[idx] += power;
                }
                Some(c) if c.is_ascii_digit() => {
                    let num: BigInt = self.digits()?.parse().expect("digits");
                    self.skip_ws();
                    let mut value = Rational::from_integer(num);
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        self.skip_ws();
                        let at = self.pos;
                        let den: BigInt = self.digits()?.parse().expect("digits");
                        if den.is_zero() {
                            return Err(err(at, "zero denominator"));
                        }
                        value /= Rational::from_integer(den);
                    }
                    coef *= value;
                }
                Some(c) => {
                    return Err(err(
                        start,
                        format!("expected a variable or number, found '{}'", c as char),
                    ))
                }
                None => return Err(err(start, "unexpected end of input")),
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        self.terms.push((exps, coef));
        Ok(())
    }
}

fn build(terms: Vec<(Vec<u32>, Rational)>, nvars: usize) -> Result<Polynomial> {
    Polynomial::from_terms(
        nvars,
        terms.into_iter().map(|(mut e, c)| {
            e.resize(nvars, 0);
            (Monomial::new(e), c)
        }),
    )
}

fn parse_terms(text: &str) -> Result<Vec<(Vec<u32>, Rational)>> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        terms: Vec::new(),
    };
    p.polynomial()?;
    Ok(p.terms)
}

/// Parses a polynomial; the variable count is one past the largest index used
/// (at least one).
pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    let terms = parse_terms(text)?;
    let nvars = terms.iter().map(|(e, _)| e.len()).max().unwrap_or(0).max(1);
    build(terms, nvars)
}

/// Parses a polynomial in the variables `x0..x{nvars-1}`.
pub fn parse_polynomial_in(text: &str, nvars: usize) -> Result<Polynomial> {
    parse_with_offset(text, nvars, 0)
}

fn parse_with_offset(text: &str, nvars: usize, base: usize) -> Result<Polynomial> {
    let terms = parse_terms(text).map_err(|e| match e {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + base,
            message,
        },
        other => other,
    })?;
    if let Some(pos) = terms.iter().position(|(e, _)| e.len() > nvars) {
        let var = terms[pos].0.len() - 1;
        let needle = format!("x{var}");
        let offset = text.find(&needle).unwrap_or(0) + base;
        return Err(err(offset, format!("variable x{var} outside x0..x{}", nvars - 1)));
    }
    build(terms, nvars)
}

/// Parses comma-separated generators.
pub fn parse_ideal(text: &str, nvars: usize) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut base = 0;
    for piece in text.split(',') {
        out.push(parse_with_offset(piece, nvars, base)?);
        base += piece.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn conic() {
        let p = parse_polynomial("x0*x2 - x1^2").unwrap();
        assert_eq!(p.nvars(), 3);
        assert_eq!(p.len(), 2);
        assert_eq!(p.coefficient(&Monomial::new(vec![0, 2, 0])), int(-1));
        assert_eq!(p.to_string(), "x0*x2 - x1^2");
    }

    #[test]
    fn coefficient_and_powers() {
        let p = parse_polynomial("3*x0^2*x1").unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.coefficient(&Monomial::new(vec![2, 1])), int(3));
        let q = parse_polynomial_in("-1/2 * x1 + x0*x0", 3).unwrap();
        assert_eq!(q.coefficient(&Monomial::new(vec![0, 1, 0])), frac(-1, 2));
        assert_eq!(q.coefficient(&Monomial::new(vec![2, 0, 0])), int(1));
    }

    #[test]
    fn homogeneity_is_reported_not_enforced() {
        let p = parse_polynomial("x0 + x1^2").unwrap();
        assert!(!p.is_homogeneous());
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_polynomial("x0 + * x1") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("unexpected {other:?}"),
        }
        match parse_polynomial("x0 $") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("unexpected {other:?}"),
        }
        match parse_polynomial_in("x0 + x5", 3) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_polynomial("").is_err());
        assert!(parse_polynomial("x0/0").is_err());
        assert!(parse_polynomial("2/0*x0").is_err());
    }

    #[test]
    fn ideal_generators() {
        let gens = parse_ideal("x0, x1", 2).unwrap();
        assert_eq!(gens.len(), 2);
        match parse_ideal("x0, x1 +", 2) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 8),
            other => panic!("unexpected {other:?}"),
        }
    }
}
