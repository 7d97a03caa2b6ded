//! Exact rational linear algebra and a small simplex solver.

mod lp;
mod matrix;

pub use lp::{solve_lp, Bound, LpOutcome, LpProblem, RowSense};
pub(crate) use matrix::{nullspace_of, rank_of as matrix_rank};
pub use matrix::{RationalMatrix, Rref};
