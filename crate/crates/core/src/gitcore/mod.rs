//! Characters and cocharacters of the diagonal torus, states, Hilbert–Mumford
//! indices and worst one-parameter subgroups.

mod action;
mod sampling;

pub use action::{act_on_form, hm_index_transported, pushforward_state, transport_1ps, Transported};
pub use sampling::{
    all_destab_generators, check_generic_semistable, check_generic_stable, generic_state_sample,
    random_group_element, sample_group_elements, stratify_samples, worst_1ps_search, GenericCheck,
    SamplerCertificate, SamplerConfig, SearchResult, StateSource, StopReason, Stratum, Verdict,
};

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::convex::{contains_origin, dual_cone_rays, min_norm_point, Ambient, MinNormResult, PointSet};
use crate::error::{Error, Result};
use crate::exactla::RationalMatrix;
use crate::rational::{exact_sqrt, format_vec, pair_int, primitive_direction, Rational};

/// Which group acts: characters of `SL` are taken modulo the determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    SL,
    GL,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "SL" => Ok(Mode::SL),
            "GL" => Ok(Mode::GL),
            _ => Err(Error::InvalidArgument(format!("unknown mode {s:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::SL => "SL",
            Mode::GL => "GL",
        })
    }
}

/// The diagonal maximal torus of `GL_{n+1}` or `SL_{n+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusContext {
    n: usize,
    mode: Mode,
}

impl TorusContext {
    pub fn new(n: usize, mode: Mode) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        Ok(Self { n, mode })
    }

    pub fn sl(n: usize) -> Result<Self> {
        Self::new(n, Mode::SL)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn ambient(&self) -> Ambient {
        match self.mode {
            Mode::SL => Ambient::SumZero,
            Mode::GL => Ambient::Full,
        }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: len,
            });
        }
        Ok(())
    }
}

/// A character of the torus as an exact coordinate vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn pair(&self, rho: &OneParamSubgroup) -> Rational {
        pair_int(&self.0, &rho.0)
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_vec(&self.0))
    }
}

/// Maps an integer exponent vector to the character space: unchanged in GL
/// mode, minus its mean in SL mode.
pub fn project_weight(ctx: &TorusContext, alpha: &[i64]) -> Result<WeightVector> {
    ctx.check_len(alpha.len())?;
    project_rational(
        ctx,
        alpha.iter().map(|&a| Rational::from_integer(a.into())).collect(),
    )
}

pub fn project_rational(ctx: &TorusContext, alpha: Vec<Rational>) -> Result<WeightVector> {
    ctx.check_len(alpha.len())?;
    match ctx.mode {
        Mode::GL => Ok(WeightVector(alpha)),
        Mode::SL => {
            let mean = alpha.iter().sum::<Rational>() / Rational::from_integer(BigInt::from(ctx.nvars()));
            Ok(WeightVector(alpha.into_iter().map(|a| a - &mean).collect()))
        }
    }
}

/// The set of characters on which a vector has nonzero components.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    ctx: TorusContext,
    weights: BTreeSet<WeightVector>,
}

impl State {
    pub fn new(ctx: TorusContext, weights: impl IntoIterator<Item = WeightVector>) -> Result<Self> {
        let weights: BTreeSet<WeightVector> = weights.into_iter().collect();
        if weights.is_empty() {
            return Err(Error::ZeroVector);
        }
        for w in &weights {
            ctx.check_len(w.0.len())?;
            if ctx.mode == Mode::SL && !w.0.iter().sum::<Rational>().is_zero() {
                return Err(Error::InvalidArgument(
                    "SL weight with nonzero coordinate sum".into(),
                ));
            }
        }
        Ok(Self { ctx, weights })
    }

    /// Projects raw exponent vectors and collects them.
    pub fn from_exponents<'a>(
        ctx: TorusContext,
        exponents: impl IntoIterator<Item = &'a [i64]>,
    ) -> Result<Self> {
        let weights = exponents
            .into_iter()
            .map(|a| project_weight(&ctx, a))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ctx, weights)
    }

    pub fn context(&self) -> &TorusContext {
        &self.ctx
    }

    pub fn weights(&self) -> impl Iterator<Item = &WeightVector> {
        self.weights.iter()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn contains(&self, w: &WeightVector) -> bool {
        self.weights.contains(w)
    }

    pub fn is_subset(&self, other: &State) -> bool {
        self.weights.is_subset(&other.weights)
    }

    pub fn union(&self, other: &State) -> State {
        State {
            ctx: self.ctx,
            weights: self.weights.union(&other.weights).cloned().collect(),
        }
    }

    /// Weights of `full` missing from this state.
    pub fn complement_in(&self, full: &State) -> Vec<WeightVector> {
        full.weights.difference(&self.weights).cloned().collect()
    }

    pub fn point_set(&self) -> PointSet {
        PointSet::with_ambient(
            self.weights.iter().map(|w| w.0.clone()).collect(),
            self.ctx.ambient(),
        )
        .expect("states are nonempty with consistent dimensions")
    }
}

impl fmt::Debug for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.weights.iter()).finish()
    }
}

/// A primitive integer cocharacter of the torus.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneParamSubgroup(Vec<BigInt>);

impl OneParamSubgroup {
    /// Accepts only primitive nonzero vectors (sum zero in SL mode).
    pub fn new(ctx: &TorusContext, coords: Vec<BigInt>) -> Result<Self> {
        ctx.check_len(coords.len())?;
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::InvalidArgument("zero one-parameter subgroup".into()));
        }
        if ctx.mode == Mode::SL && !coords.iter().sum::<BigInt>().is_zero() {
            return Err(Error::InvalidArgument(
                "SL one-parameter subgroup must have coordinate sum zero".into(),
            ));
        }
        let gcd = coords.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if gcd != BigInt::from(1) {
            return Err(Error::InvalidArgument(
                "one-parameter subgroup is not primitive".into(),
            ));
        }
        Ok(Self(coords))
    }

    pub fn from_i64(ctx: &TorusContext, coords: &[i64]) -> Result<Self> {
        Self::new(ctx, coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The primitive integer vector on the ray through a nonzero rational vector.
    pub fn along(ctx: &TorusContext, direction: &[Rational]) -> Result<Self> {
        let p = primitive_direction(direction).ok_or(Error::Proportionality)?;
        Self::new(ctx, p)
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn norm_squared(&self) -> BigInt {
        self.0.iter().map(|x| x * x).sum()
    }
}

impl fmt::Debug for OneParamSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// An invertible `(n+1) x (n+1)` matrix acting on coordinates by
/// `g.x_i = sum_j g_{ji} x_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement(RationalMatrix);

impl GroupElement {
    pub fn new(matrix: RationalMatrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        if matrix.determinant()?.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(Self(matrix))
    }

    pub fn identity(size: usize) -> Result<Self> {
        Self::new(RationalMatrix::identity(size)?)
    }

    /// Permutation matrix with `g.x_i = x_{perm[i]}`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let size = perm.len();
        let mut m = RationalMatrix::zeros(size, size)?;
        for (i, &j) in perm.iter().enumerate() {
            if j >= size {
                return Err(Error::InvalidArgument("permutation index out of range".into()));
            }
            m[(j, i)] = Rational::from_integer(1.into());
        }
        Self::new(m)
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement(self.0.inverse().expect("group elements are invertible"))
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement(self.0.mul(&other.0).expect("square matrices of equal size"))
    }
}

/// `-min <chi, rho>` over the state. `v` is destabilized by `rho` iff this is
/// negative.
pub fn hm_index(state: &State, rho: &OneParamSubgroup) -> Rational {
    state
        .weights()
        .map(|w| w.pair(rho))
        .min()
        .map(|m| -m)
        .expect("states are nonempty")
}

/// Worst one-parameter subgroup of the torus for a given state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorstResult {
    /// Present iff the nearest point is nonzero.
    pub rho: Option<OneParamSubgroup>,
    /// Squared distance from the origin to the state polytope.
    pub norm_squared: Rational,
    pub certificate: MinNormResult,
}

impl WorstResult {
    pub fn is_unstable(&self) -> bool {
        self.rho.is_some()
    }

    /// Distance to the origin when it is rational.
    pub fn norm(&self) -> Option<Rational> {
        exact_sqrt(&self.norm_squared)
    }

    pub fn norm_f64(&self) -> f64 {
        crate::rational::to_f64(&self.norm_squared).sqrt()
    }
}

/// Nearest point of the state polytope; a nonzero nearest point gives the
/// worst one-parameter subgroup along its direction.
pub fn worst_1ps_for_torus(state: &State) -> Result<WorstResult> {
    let certificate = min_norm_point(&state.point_set());
    let rho = if certificate.norm_squared.is_zero() {
        None
    } else {
        Some(OneParamSubgroup::along(state.context(), &certificate.point)?)
    };
    Ok(WorstResult {
        rho,
        norm_squared: certificate.norm_squared.clone(),
        certificate,
    })
}

/// Generators of the closed destabilizing cone, plus whether the open cone
/// (strictly positive pairings) is nonempty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DestabRays {
    pub rays: Vec<Vec<BigInt>>,
    pub open_cone_nonempty: bool,
}

pub fn destab_rays(state: &State) -> DestabRays {
    let set = state.point_set();
    DestabRays {
        rays: dual_cone_rays(&set),
        open_cone_nonempty: !contains_origin(&set),
    }
}

/// Orbit of a character under coordinate permutations.
pub fn weyl_orbit(ctx: &TorusContext, chi: &WeightVector) -> Result<BTreeSet<WeightVector>> {
    ctx.check_len(chi.0.len())?;
    Ok(chi
        .0
        .iter()
        .cloned()
        .permutations(chi.0.len())
        .map(WeightVector)
        .collect())
}

/// Exact comparison of normalized indices: true iff
/// `g(a)/|a| > g(b)/|b|` where `g(rho) = min <chi, rho>`.
pub fn ratio_exceeds(state: &State, a: &OneParamSubgroup, b: &OneParamSubgroup) -> bool {
    let ga = -hm_index(state, a);
    let gb = -hm_index(state, b);
    let na = Rational::from_integer(a.norm_squared());
    let nb = Rational::from_integer(b.norm_squared());
    match (ga.is_positive(), gb.is_positive()) {
        (true, true) => &ga * &ga * nb > &gb * &gb * na,
        (true, false) => true,
        (false, true) => false,
        (false, false) => &ga * &ga * nb < &gb * &gb * na,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, vec_of};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn projection_examples() {
        let sl2 = TorusContext::sl(2).unwrap();
        assert!(project_weight(&sl2, &[1, 1, 1]).unwrap().is_zero());
        let sl1 = TorusContext::sl(1).unwrap();
        assert_eq!(
            project_weight(&sl1, &[2, 1]).unwrap().coords(),
            &[frac(1, 2), frac(-1, 2)]
        );
        assert_eq!(
            project_weight(&sl2, &[1, 0, 0]).unwrap().coords(),
            &[frac(2, 3), frac(-1, 3), frac(-1, 3)]
        );
        let gl = TorusContext::new(1, Mode::GL).unwrap();
        assert_eq!(
            project_weight(&gl, &[2, 1]).unwrap().coords(),
            &vec_of(&[2, 1])[..]
        );
        assert!(project_weight(&sl2, &[1, 0]).is_err());
    }

    #[test]
    fn hm_index_examples() {
        let ctx = TorusContext::sl(2).unwrap();
        let s = State::from_exponents(ctx, [&[1i64, 0, 0][..]]).unwrap();
        let rho = OneParamSubgroup::from_i64(&ctx, &[2, -1, -1]).unwrap();
        assert_eq!(hm_index(&s, &rho), int(-2));

        let with_zero = State::from_exponents(ctx, [&[1i64, 1, 1][..], &[3, 0, 0]]).unwrap();
        assert!(!hm_index(&with_zero, &rho).is_negative());

        let sl1 = TorusContext::sl(1).unwrap();
        let pair = State::new(
            sl1,
            [
                project_weight(&sl1, &[2, 0]).unwrap(),
                project_weight(&sl1, &[0, 2]).unwrap(),
            ],
        )
        .unwrap();
        let r = OneParamSubgroup::from_i64(&sl1, &[1, -1]).unwrap();
        assert_eq!(hm_index(&pair, &r), int(2));
    }

    #[test]
    fn one_param_subgroup_validation() {
        let ctx = TorusContext::sl(2).unwrap();
        assert!(OneParamSubgroup::from_i64(&ctx, &[0, 0, 0]).is_err());
        assert!(OneParamSubgroup::from_i64(&ctx, &[1, 0, 0]).is_err());
        assert!(OneParamSubgroup::from_i64(&ctx, &[4, -2, -2]).is_err());
        assert!(OneParamSubgroup::from_i64(&ctx, &[1, -1]).is_err());
    }

    #[test]
    fn hyperplane_worst_direction() {
        for n in 1..=5usize {
            let ctx = TorusContext::sl(n).unwrap();
            let mut e = vec![0i64; n + 1];
            e[0] = 1;
            let s = State::from_exponents(ctx, [&e[..]]).unwrap();
            let w = worst_1ps_for_torus(&s).unwrap();
            let mut expected = vec![-1i64; n + 1];
            expected[0] = n as i64;
            assert_eq!(w.rho.unwrap().coords(), &ints(&expected)[..]);
            assert_eq!(w.norm_squared, frac(n as i64, n as i64 + 1));
        }
    }

    #[test]
    fn semistable_state_has_no_direction() {
        let sl1 = TorusContext::sl(1).unwrap();
        let s = State::from_exponents(sl1, [&[2i64, 0][..], &[0, 2]]).unwrap();
        let w = worst_1ps_for_torus(&s).unwrap();
        assert!(w.rho.is_none());
        assert!(w.norm_squared.is_zero());
    }

    #[test]
    fn double_root_binary_cubic() {
        let sl1 = TorusContext::sl(1).unwrap();
        let s = State::from_exponents(sl1, [&[2i64, 1][..]]).unwrap();
        let w = worst_1ps_for_torus(&s).unwrap();
        assert_eq!(w.rho.unwrap().coords(), &ints(&[1, -1])[..]);
        assert_eq!(w.norm_squared, frac(1, 2));
    }

    #[test]
    fn destab_examples() {
        let sl1 = TorusContext::sl(1).unwrap();
        let s = State::from_exponents(sl1, [&[2i64, 1][..]]).unwrap();
        let d = destab_rays(&s);
        assert_eq!(d.rays, vec![ints(&[1, -1])]);
        assert!(d.open_cone_nonempty);

        let pair = State::from_exponents(sl1, [&[2i64, 0][..], &[0, 2]]).unwrap();
        let d = destab_rays(&pair);
        assert!(d.rays.is_empty());
        assert!(!d.open_cone_nonempty);

        let sl2 = TorusContext::sl(2).unwrap();
        let hyper = State::from_exponents(sl2, [&[1i64, 0, 0][..]]).unwrap();
        let d = destab_rays(&hyper);
        assert!(d.rays.contains(&ints(&[2, -1, -1])));
        assert!(d.open_cone_nonempty);
    }

    #[test]
    fn weyl_orbits() {
        let sl2 = TorusContext::sl(2).unwrap();
        let zero = project_weight(&sl2, &[1, 1, 1]).unwrap();
        assert_eq!(weyl_orbit(&sl2, &zero).unwrap().len(), 1);
        let sl1 = TorusContext::sl(1).unwrap();
        let half = project_weight(&sl1, &[2, 1]).unwrap();
        let orbit = weyl_orbit(&sl1, &half).unwrap();
        assert_eq!(orbit.len(), 2);
        assert!(orbit.contains(&project_weight(&sl1, &[1, 2]).unwrap()));
        let v = project_weight(&sl2, &[1, 0, 0]).unwrap();
        assert_eq!(weyl_orbit(&sl2, &v).unwrap().len(), 3);
    }

    #[test]
    fn empty_state_is_zero_vector() {
        let ctx = TorusContext::sl(1).unwrap();
        assert_eq!(State::new(ctx, []), Err(Error::ZeroVector));
    }
}
