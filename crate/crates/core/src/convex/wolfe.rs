//! Wolfe's minimum-norm-point algorithm in exact arithmetic.

use num_traits::{One, Signed, Zero};

use super::PointSet;
use crate::exactla::RationalMatrix;
use crate::rational::{dot, norm_squared, Rational};

/// Nearest point of a hull to the origin with its convex-combination witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinNormResult {
    pub point: Vec<Rational>,
    /// `(index into the point set, weight)`, weights positive and summing to one.
    pub coefficients: Vec<(usize, Rational)>,
    pub norm_squared: Rational,
}

impl MinNormResult {
    /// Checks the witness: weights form a convex combination equal to `point`,
    /// and every input pairs with `point` to at least `norm_squared`.
    pub fn verify(&self, set: &PointSet) -> bool {
        let mut sum = vec![Rational::zero(); set.dim()];
        let mut total = Rational::zero();
        for (i, w) in &self.coefficients {
            if w.is_negative() {
                return false;
            }
            total += w;
            for (s, x) in sum.iter_mut().zip(&set.points()[*i]) {
                *s += w * x;
            }
        }
        total.is_one()
            && sum == self.point
            && norm_squared(&self.point) == self.norm_squared
            && set
                .points()
                .iter()
                .all(|p| dot(p, &self.point) >= self.norm_squared)
    }
}

/// Affine minimizer of the norm over the affine hull of affinely independent
/// points: barycentric coordinates `v` with `sum v = 1`.
fn affine_minimizer(points: &[&Vec<Rational>]) -> Vec<Rational> {
    let k = points.len();
    let mut rows = Vec::with_capacity(k + 1);
    for p in points {
        let mut row: Vec<Rational> = points.iter().map(|q| dot(p, q)).collect();
        row.push(Rational::one());
        rows.push(row);
    }
    let mut last = vec![Rational::one(); k];
    last.push(Rational::zero());
    rows.push(last);
    let mut rhs = vec![Rational::zero(); k];
    rhs.push(Rational::one());
    let system = RationalMatrix::from_rows(rows).expect("corral is nonempty");
    let mut sol = system
        .solve(&rhs)
        .expect("corral points are affinely independent");
    sol.truncate(k);
    sol
}

fn combine(set: &PointSet, corral: &[usize], weights: &[Rational]) -> Vec<Rational> {
    let mut x = vec![Rational::zero(); set.dim()];
    for (&i, w) in corral.iter().zip(weights) {
        if w.is_zero() {
            continue;
        }
        for (xc, pc) in x.iter_mut().zip(&set.points()[i]) {
            *xc += w * pc;
        }
    }
    x
}

/// Unique point of the convex hull nearest to the origin.
///
/// Ties in the point-selection step go to the lowest index, so the returned
/// certificate is deterministic.
pub fn min_norm_point(set: &PointSet) -> MinNormResult {
    let pts = set.points();
    let start = (0..pts.len())
        .min_by(|&a, &b| norm_squared(&pts[a]).cmp(&norm_squared(&pts[b])))
        .expect("point set is nonempty");
    let mut corral = vec![start];
    let mut weights = vec![Rational::one()];
    let mut x = pts[start].clone();

    loop {
        let xx = norm_squared(&x);
        let (j, best) = pts
            .iter()
            .enumerate()
            .map(|(i, p)| (i, dot(&x, p)))
            .min_by(|a, b| a.1.cmp(&b.1))
            .expect("point set is nonempty");
        if best >= xx || corral.contains(&j) {
            break;
        }
        corral.push(j);
        weights.push(Rational::zero());

        // minor cycles: move toward the affine minimizer, shedding points
        loop {
            let refs: Vec<&Vec<Rational>> = corral.iter().map(|&i| &pts[i]).collect();
            let v = affine_minimizer(&refs);
            if v.iter().all(Signed::is_positive) {
                weights = v;
                break;
            }
            let mut theta = Rational::one();
            for (w, vi) in weights.iter().zip(&v) {
                if !vi.is_positive() && w > vi {
                    let t = w / (w - vi);
                    if t < theta {
                        theta = t;
                    }
                }
            }
            let one_minus = Rational::one() - &theta;
            let mut next_corral = Vec::with_capacity(corral.len());
            let mut next_weights = Vec::with_capacity(corral.len());
            for ((&i, w), vi) in corral.iter().zip(&weights).zip(&v) {
                let nw = &theta * vi + &one_minus * w;
                if nw.is_positive() {
                    next_corral.push(i);
                    next_weights.push(nw);
                }
            }
            corral = next_corral;
            weights = next_weights;
        }
        x = combine(set, &corral, &weights);
    }

    let norm_squared = norm_squared(&x);
    let mut coefficients: Vec<(usize, Rational)> = corral.into_iter().zip(weights).collect();
    coefficients.sort_by_key(|(i, _)| *i);
    MinNormResult {
        point: x,
        coefficients,
        norm_squared,
    }
}
