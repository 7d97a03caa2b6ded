//! Homogeneous polynomials and the weight combinatorics of Hilbert points.

mod hilbert;
mod parse;

pub use hilbert::{
    all_wedge_weights, binomial, degree_piece, for_each_basis, hypersurface_generic_state, plucker_state,
    state_of_form, trivial_weight_necessary, vertex_oracle, DegreePiece, IdealInput, DEFAULT_BUDGET,
};
pub use parse::{parse_ideal, parse_polynomial, parse_polynomial_in};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// Exponent vector `x_0^{a_0} ... x_n^{a_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Exponents as signed integers.
    pub fn weight(&self) -> Vec<i64> {
        self.0.iter().map(|&a| i64::from(a)).collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All degree-`m` monomials in `nvars` variables, graded-lex descending with
/// `x_0 > x_1 > ... > x_n` (so `x_0^m` comes first).
pub fn monomials_of_degree(nvars: usize, m: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, left: u32, remaining_vars: usize, out: &mut Vec<Monomial>) {
        if remaining_vars == 1 {
            prefix.push(left);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in (0..=left).rev() {
            prefix.push(a);
            rec(prefix, left - a, remaining_vars - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        rec(&mut Vec::with_capacity(nvars), m, nvars, &mut out);
    }
    out
}

/// Sparse polynomial with exact rational coefficients; zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: m.nvars(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Number of variables, `n + 1`.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let sum = self.terms.remove(&m).unwrap_or_else(Rational::zero) + c;
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    /// Embeds into a ring with at least as many variables.
    pub fn with_nvars(&self, nvars: usize) -> Result<Self> {
        if nvars < self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: nvars,
            });
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = m.0.clone();
            e.resize(nvars, 0);
            (Monomial(e), c.clone())
        });
        Self::from_terms(nvars, terms)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::constant(self.nvars, Rational::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // graded-lex descending
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let is_const = m.degree() == 0;
            if !abs.is_one() || is_const {
                f.write_str(&format_rational(&abs))?;
                if !is_const {
                    f.write_str("*")?;
                }
            }
            if !is_const {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn canonical_order_of_ternary_quadrics() {
        let ms: Vec<String> = monomials_of_degree(3, 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(ms, ["x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"]);
    }

    #[test]
    fn monomial_counts_are_binomial() {
        for nvars in 1..5 {
            for m in 0..5 {
                assert_eq!(
                    monomials_of_degree(nvars, m).len() as u128,
                    binomial(nvars as u64 - 1 + u64::from(m), u64::from(m))
                );
            }
        }
    }

    #[test]
    fn arithmetic_and_display() {
        let x0 = Polynomial::var(3, 0);
        let x1 = Polynomial::var(3, 1);
        let x2 = Polynomial::var(3, 2);
        let conic = x0.mul(&x2).add(&x1.pow(2).scale(&int(-1)));
        assert_eq!(conic.to_string(), "x0*x2 - x1^2");
        assert!(conic.is_homogeneous());
        assert_eq!(conic.degree(), Some(2));
        let cancel = conic.add(&conic.scale(&int(-1)));
        assert!(cancel.is_zero());
        let mixed = x0.add(&x1.pow(2));
        assert!(!mixed.is_homogeneous());
    }
}
