//! Brute-force oracles and generators shared by the integration suites.
//! Nothing here calls into the solvers it is used to check.
#![allow(dead_code)]

use git_instab::polyalg::{monomials_of_degree, Polynomial};
use git_instab::rational::{frac, Rational};
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// Gaussian elimination returning the unique solution of a square system.
pub fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(p, c);
        b.swap(p, c);
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = &a[r][c] / &a[c][c];
                for k in c..n {
                    let v = &f * &a[c][k];
                    a[r][k] -= v;
                }
                let v = &f * &b[c];
                b[r] -= v;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let mut r = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &rows[r][c];
                for k in c..cols {
                    let v = &f * &rows[r][k];
                    rows[i][k] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Nearest point of the hull by enumerating every affinely independent
/// subset, solving the affine least-norm system on its hull and keeping the
/// best candidate with nonnegative barycentric coordinates.
pub fn brute_force_min_norm(points: &[Vec<Rational>]) -> (Vec<Rational>, Rational) {
    let k = points.len();
    let dim = points[0].len();
    let mut best: Option<(Vec<Rational>, Rational)> = None;
    for mask in 1u32..(1 << k) {
        let subset: Vec<&Vec<Rational>> = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| &points[i])
            .collect();
        let diffs: Vec<Vec<Rational>> = subset[1..]
            .iter()
            .map(|p| p.iter().zip(subset[0]).map(|(a, b)| a - b).collect())
            .collect();
        if !diffs.is_empty() && rank(diffs.clone()) != diffs.len() {
            continue;
        }
        let s = subset.len();
        let mut a = Vec::with_capacity(s + 1);
        for p in &subset {
            let mut row: Vec<Rational> = subset.iter().map(|q| dot(p, q)).collect();
            row.push(Rational::one());
            a.push(row);
        }
        let mut last = vec![Rational::one(); s];
        last.push(Rational::zero());
        a.push(last);
        let mut b = vec![Rational::zero(); s];
        b.push(Rational::one());
        let Some(sol) = solve_square(a, b) else { continue };
        if sol[..s].iter().any(Signed::is_negative) {
            continue;
        }
        let mut y = vec![Rational::zero(); dim];
        for (w, p) in sol[..s].iter().zip(&subset) {
            for (yc, pc) in y.iter_mut().zip(p.iter()) {
                *yc += w * pc;
            }
        }
        let n2 = dot(&y, &y);
        if best.as_ref().is_none_or(|(_, b)| n2 < *b) {
            best = Some((y, n2));
        }
    }
    best.expect("singletons are always candidates")
}

/// Rational in `[-5, 5]` with denominator at most 4.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    let den = rng.gen_range(1..=4);
    let num = rng.gen_range(-5 * den..=5 * den);
    frac(num, den)
}

pub fn random_points(rng: &mut impl Rng, dim: usize, count: usize) -> Vec<Vec<Rational>> {
    (0..count)
        .map(|_| (0..dim).map(|_| small_rational(rng)).collect())
        .collect()
}

/// Random nonzero homogeneous form of degree `d` in `nvars` variables with
/// small integer coefficients and sparse support.
pub fn random_form(rng: &mut impl Rng, nvars: usize, d: u32) -> Polynomial {
    let monos = monomials_of_degree(nvars, d);
    loop {
        let mut p = Polynomial::zero(nvars);
        for m in &monos {
            if rng.gen_bool(0.4) {
                let c: i64 = rng.gen_range(-3..=3);
                p.add_term(m.clone(), Rational::from_integer(c.into()));
            }
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random form whose support avoids the origin of the SL character space,
/// i.e. unstable already for the diagonal torus. Built from monomials with
/// a large first exponent.
pub fn random_unstable_form(rng: &mut impl Rng, nvars: usize, d: u32) -> Polynomial {
    let monos: Vec<_> = monomials_of_degree(nvars, d)
        .into_iter()
        .filter(|m| (m.exponents()[0] as usize) * nvars > d as usize)
        .collect();
    loop {
        let mut p = Polynomial::zero(nvars);
        for m in &monos {
            if rng.gen_bool(0.5) {
                let c: i64 = rng.gen_range(1..=3);
                p.add_term(m.clone(), Rational::from_integer(c.into()));
            }
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// All integer vectors in `[-r, r]^dim`.
pub fn box_vectors(dim: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-r..=r).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Exhaustive search for an `ell`-subset of degree-`m` monomials in `n + 1`
/// variables whose exponent columns all have the same sum.
pub fn trivial_weight_subset_exists(n: usize, m: u32, ell: usize) -> bool {
    let monos = monomials_of_degree(n + 1, m);
    fn rec(monos: &[Vec<u32>], start: usize, left: usize, sums: &mut Vec<u32>) -> bool {
        if left == 0 {
            return sums.iter().all(|&s| s == sums[0]);
        }
        for j in start..monos.len() {
            if monos.len() - j < left {
                break;
            }
            for (s, e) in sums.iter_mut().zip(&monos[j]) {
                *s += e;
            }
            let found = rec(monos, j + 1, left - 1, sums);
            for (s, e) in sums.iter_mut().zip(&monos[j]) {
                *s -= e;
            }
            if found {
                return true;
            }
        }
        false
    }
    let exps: Vec<Vec<u32>> = monos.iter().map(|m| m.exponents().to_vec()).collect();
    rec(&exps, 0, ell, &mut vec![0; n + 1])
}
