//! Exact-arithmetic toolkit for torus (semi)stability in representations of
//! `SL_{n+1}` / `GL_{n+1}`.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactla`]: dense rational matrices, row reduction and a small simplex LP.
//! * [`convex`]: minimum-norm point (Wolfe), origin tests, dual cone rays.
//! * [`polyalg`]: homogeneous polynomials, degree pieces of ideals, Plücker states.
//! * [`gitcore`]: states, Hilbert–Mumford indices, worst one-parameter subgroups,
//!   the group action and sampling of generic states.
//! * [`svg`]: static pictures of planar state polytopes.
//!
//! Every decision path uses exact rationals; there are no tolerances.
//!
//! ```
//! use git_instab::gitcore::{worst_1ps_for_torus, TorusContext};
//! use git_instab::polyalg::{parse_polynomial_in, state_of_form};
//! use git_instab::rational::frac;
//!
//! let ctx = TorusContext::sl(2)?;
//! let f = parse_polynomial_in("x0^2*x1 + x0*x2^2", 3)?;
//! let worst = worst_1ps_for_torus(&state_of_form(&f, &ctx)?)?;
//! assert!(worst.is_unstable());
//! assert!(worst.norm_squared > frac(0, 1));
//! # Ok::<(), git_instab::Error>(())
//! ```

pub mod convex;
pub mod error;
pub mod exactla;
pub mod gitcore;
pub mod polyalg;
pub mod rational;
pub mod svg;

pub use error::{Error, Result};
pub use rational::Rational;
