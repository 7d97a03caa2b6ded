//! Generators of the dual cone `{rho : <chi, rho> >= 0 for all chi}`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{Ambient, PointSet};
use crate::exactla::{matrix_rank, nullspace_of, RationalMatrix};
use crate::rational::{dot, primitive_direction, Rational};

fn to_rational(v: &[BigInt]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

fn normalize(v: &[Rational]) -> Vec<Rational> {
    to_rational(&primitive_direction(v).expect("ray is nonzero"))
}

/// Extreme rays of the dual cone inside the ambient subspace, as primitive
/// integer vectors.
///
/// When the cone contains a line, both directions of each lineality basis
/// vector are listed as well, so the output always generates the cone over
/// the nonnegative rationals. The list is empty iff the cone is `{0}`.
pub fn dual_cone_rays(set: &PointSet) -> Vec<Vec<BigInt>> {
    let d = set.dim();
    let equalities: Vec<Vec<Rational>> = match set.ambient() {
        Ambient::Full => Vec::new(),
        Ambient::SumZero => vec![vec![Rational::from_integer(1.into()); d]],
    };
    let mut rows = equalities.clone();
    rows.extend(set.points().iter().cloned());
    let lineality = nullspace_of(&rows, d);

    // pointed part: the cone intersected with the orthogonal complement of its lineality
    let mut complement_rows = equalities;
    complement_rows.extend(lineality.iter().cloned());
    let basis = nullspace_of(&complement_rows, d);
    let k = basis.len();

    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for l in &lineality {
        let p = primitive_direction(l).expect("basis vector is nonzero");
        out.push(p.iter().map(|x| -x).collect());
        out.push(p);
    }

    if k > 0 {
        let constraints: Vec<Vec<Rational>> = set
            .points()
            .iter()
            .map(|chi| basis.iter().map(|b| dot(chi, b)).collect())
            .collect();
        for y in pointed_rays(&constraints, k) {
            let mut rho = vec![Rational::zero(); d];
            for (coef, b) in y.iter().zip(&basis) {
                for (r, bc) in rho.iter_mut().zip(b) {
                    *r += coef * bc;
                }
            }
            out.push(primitive_direction(&rho).expect("ray is nonzero"));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Extreme rays of `{y : A y >= 0}` for a constraint matrix of full column
/// rank `k`, by the double description method.
fn pointed_rays(constraints: &[Vec<Rational>], k: usize) -> Vec<Vec<Rational>> {
    let at = RationalMatrix::from_rows(constraints.to_vec())
        .expect("constraints are nonempty")
        .transpose();
    let initial = at.rref().pivot_columns;
    debug_assert_eq!(initial.len(), k);
    let square =
        RationalMatrix::from_rows(initial.iter().map(|&i| constraints[i].clone()).collect()).expect("k >= 1");
    let inv = square.inverse().expect("initial rows are independent");
    let mut rays: Vec<Vec<Rational>> = (0..k).map(|j| normalize(&inv.column(j))).collect();
    let mut processed = initial.clone();

    for (idx, a) in constraints.iter().enumerate() {
        if initial.contains(&idx) {
            continue;
        }
        let values: Vec<Rational> = rays.iter().map(|r| dot(a, r)).collect();
        let zero_set = |r: &Vec<Rational>| -> Vec<usize> {
            processed
                .iter()
                .copied()
                .filter(|&i| dot(&constraints[i], r).is_zero())
                .collect()
        };
        let mut next: Vec<Vec<Rational>> = Vec::new();
        for (r, v) in rays.iter().zip(&values) {
            if !v.is_negative() {
                next.push(r.clone());
            }
        }
        for (p, vp) in rays.iter().zip(&values) {
            if !vp.is_positive() {
                continue;
            }
            let zp = zero_set(p);
            for (n, vn) in rays.iter().zip(&values) {
                if !vn.is_negative() {
                    continue;
                }
                let zn = zero_set(n);
                let common: Vec<Vec<Rational>> = zp
                    .iter()
                    .filter(|i| zn.contains(i))
                    .map(|&i| constraints[i].clone())
                    .collect();
                if k >= 2 && common.len() >= k - 2 && matrix_rank(&common) == k - 2 {
                    let combo: Vec<Rational> = n.iter().zip(p).map(|(nc, pc)| vp * nc - vn * pc).collect();
                    let combo = normalize(&combo);
                    if !next.contains(&combo) {
                        next.push(combo);
                    }
                }
            }
        }
        rays = next;
        processed.push(idx);
    }
    rays
}
