//! Exact convex geometry on finite point sets.

mod cone;
mod wolfe;

pub use cone::dual_cone_rays;
pub use wolfe::{min_norm_point, MinNormResult};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{solve_lp, Bound, LpOutcome, LpProblem, RationalMatrix, RowSense};
use crate::rational::Rational;

/// Linear subspace the points live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ambient {
    /// All of `Q^dim`.
    Full,
    /// The hyperplane of coordinate-sum zero.
    SumZero,
}

/// A nonempty, deduplicated finite set of rational points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    ambient: Ambient,
    points: Vec<Vec<Rational>>,
}

impl PointSet {
    pub fn new(points: Vec<Vec<Rational>>) -> Result<Self> {
        Self::with_ambient(points, Ambient::Full)
    }

    pub fn sum_zero(points: Vec<Vec<Rational>>) -> Result<Self> {
        Self::with_ambient(points, Ambient::SumZero)
    }

    /// Builds a point set, dropping duplicates but keeping first-seen order.
    pub fn with_ambient(points: Vec<Vec<Rational>>, ambient: Ambient) -> Result<Self> {
        let dim = points
            .first()
            .map(Vec::len)
            .ok_or(Error::EmptyInput("point set"))?;
        if dim == 0 {
            return Err(Error::EmptyInput("zero-dimensional points"));
        }
        let mut unique: Vec<Vec<Rational>> = Vec::with_capacity(points.len());
        for p in points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            if ambient == Ambient::SumZero && !p.iter().sum::<Rational>().is_zero() {
                return Err(Error::InvalidArgument(
                    "point outside the sum-zero hyperplane".into(),
                ));
            }
            if !unique.contains(&p) {
                unique.push(p);
            }
        }
        Ok(Self {
            dim,
            ambient,
            points: unique,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// Dimension of the ambient linear subspace.
    pub fn ambient_dim(&self) -> usize {
        match self.ambient {
            Ambient::Full => self.dim,
            Ambient::SumZero => self.dim - 1,
        }
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// True iff the origin lies in the convex hull.
pub fn contains_origin(set: &PointSet) -> bool {
    min_norm_point(set).norm_squared.is_zero()
}

/// Dimension of the affine hull.
pub fn affine_dim(set: &PointSet) -> usize {
    let base = &set.points[0];
    let diffs: Vec<Vec<Rational>> = set.points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    crate::exactla::matrix_rank(&diffs)
}

/// True iff the origin is an interior point of the hull relative to the
/// ambient subspace: the points span it and some strictly positive convex
/// combination vanishes.
pub fn origin_in_interior(set: &PointSet) -> bool {
    if crate::exactla::matrix_rank(&set.points) != set.ambient_dim() {
        return false;
    }
    max_min_weight(set).is_some_and(|eps| eps > Rational::zero())
}

/// Largest `eps` such that `sum l_i p_i = 0`, `sum l_i = 1`, `l_i >= eps`;
/// `None` when the origin is outside the hull.
pub(crate) fn max_min_weight(set: &PointSet) -> Option<Rational> {
    let k = set.len();
    let d = set.dim;
    // variables: l_1..l_k, eps (last, free)
    let mut rows = Vec::with_capacity(d + 1 + k);
    let mut rhs = Vec::with_capacity(d + 1 + k);
    let mut senses = Vec::with_capacity(d + 1 + k);
    for c in 0..d {
        let mut row: Vec<Rational> = set.points.iter().map(|p| p[c].clone()).collect();
        row.push(Rational::zero());
        rows.push(row);
        rhs.push(Rational::zero());
        senses.push(RowSense::Eq);
    }
    let mut sum_row = vec![Rational::one(); k];
    sum_row.push(Rational::zero());
    rows.push(sum_row);
    rhs.push(Rational::one());
    senses.push(RowSense::Eq);
    for i in 0..k {
        let mut row = vec![Rational::zero(); k + 1];
        row[i] = Rational::one();
        row[k] = -Rational::one();
        rows.push(row);
        rhs.push(Rational::zero());
        senses.push(RowSense::Ge);
    }
    let mut objective = vec![Rational::zero(); k + 1];
    objective[k] = Rational::one();
    let mut bounds = vec![Bound::NonNegative; k];
    bounds.push(Bound::Free);
    let matrix = RationalMatrix::from_rows(rows).ok()?;
    let problem = LpProblem::new(objective, matrix, rhs, senses, bounds).ok()?;
    match solve_lp(&problem) {
        LpOutcome::Optimal { value, .. } => Some(value),
        LpOutcome::Infeasible | LpOutcome::Unbounded => None,
    }
}
