//! Random coordinate changes: generic states, empirical strata, generic
//! (semi)stability verdicts and the worst-torus search.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    act_on_form, destab_rays, transport_1ps, worst_1ps_for_torus, GroupElement, Mode, OneParamSubgroup,
    State, TorusContext, Transported, WeightVector, WorstResult,
};
use crate::convex::{contains_origin, min_norm_point, origin_in_interior, MinNormResult};
use crate::error::{Error, Result};
use crate::exactla::RationalMatrix;
use crate::polyalg::{
    all_wedge_weights, degree_piece, hypersurface_generic_state, plucker_state, state_of_form, IdealInput,
    Polynomial,
};
use crate::rational::Rational;

/// The vector `v` whose states are computed: a form, or the Hilbert point
/// `wedge^ell I_m` of a homogeneous ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StateSource {
    Form {
        ctx: TorusContext,
        form: Polynomial,
        degree: u32,
    },
    HilbertPoint {
        ctx: TorusContext,
        ideal: IdealInput,
        m: u32,
        ell: usize,
        budget: u128,
    },
}

impl StateSource {
    pub fn form(ctx: TorusContext, form: Polynomial) -> Result<Self> {
        // validates nonzero, homogeneous and variable count
        state_of_form(&form, &ctx)?;
        let degree = form.degree().expect("nonzero form");
        if degree == 0 {
            return Err(Error::InvalidArgument(
                "constant forms are torus-invariant".into(),
            ));
        }
        Ok(StateSource::Form { ctx, form, degree })
    }

    pub fn hilbert_point(ctx: TorusContext, ideal: IdealInput, m: u32, budget: u128) -> Result<Self> {
        if ideal.nvars() != ctx.nvars() {
            return Err(Error::DimensionMismatch {
                expected: ctx.nvars(),
                found: ideal.nvars(),
            });
        }
        let ell = degree_piece(&ideal, m)?.ell;
        Ok(StateSource::HilbertPoint {
            ctx,
            ideal,
            m,
            ell,
            budget,
        })
    }

    pub fn context(&self) -> &TorusContext {
        match self {
            StateSource::Form { ctx, .. } | StateSource::HilbertPoint { ctx, .. } => ctx,
        }
    }

    pub fn state(&self) -> Result<State> {
        match self {
            StateSource::Form { ctx, form, .. } => state_of_form(form, ctx),
            StateSource::HilbertPoint {
                ctx,
                ideal,
                m,
                budget,
                ..
            } => plucker_state(&degree_piece(ideal, *m)?, ctx, *budget),
        }
    }

    /// State of `g.v`.
    pub fn state_under(&self, g: &GroupElement) -> Result<State> {
        match self {
            StateSource::Form { ctx, form, .. } => state_of_form(&act_on_form(g, form)?, ctx),
            StateSource::HilbertPoint {
                ctx,
                ideal,
                m,
                budget,
                ..
            } => {
                let moved = ideal
                    .generators()
                    .iter()
                    .map(|f| act_on_form(g, f))
                    .collect::<Result<Vec<_>>>()?;
                let moved = IdealInput::new(ideal.nvars(), moved)?;
                plucker_state(&degree_piece(&moved, *m)?, ctx, *budget)
            }
        }
    }

    /// Every weight of the ambient representation.
    pub fn full_weight_set(&self) -> Result<State> {
        match self {
            StateSource::Form { ctx, degree, .. } => hypersurface_generic_state(ctx, *degree),
            StateSource::HilbertPoint {
                ctx, m, ell, budget, ..
            } => all_wedge_weights(ctx, *m, *ell, *budget),
        }
    }
}

/// Parameters of the random coordinate-change sampler.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplerConfig {
    pub trials: usize,
    pub entry_bound: i64,
    pub stall: usize,
    pub seed: u64,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        Self {
            trials: 50,
            entry_bound: 5,
            stall: 5,
            seed: 0,
        }
    }
}

impl SamplerConfig {
    fn validate(&self) -> Result<()> {
        if self.trials == 0 || self.entry_bound < 1 || self.stall == 0 {
            return Err(Error::InvalidArgument(
                "trials, entry_bound and stall must be at least 1".into(),
            ));
        }
        Ok(())
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    Stall,
    TrialLimit,
}

/// Evidence behind a sampled generic state. Only one-sided: the state is a
/// subset of the true generic state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplerCertificate {
    pub seed: u64,
    pub entry_bound: i64,
    pub stall_window: usize,
    /// Matrices drawn, singular ones included.
    pub trials_used: usize,
    pub singular_draws: usize,
    /// Consecutive nonsingular draws without a new weight when sampling ended.
    pub final_stall: usize,
    pub stopped_by: StopReason,
}

/// Uniform integer matrix with entries in `[-bound, bound]`; `None` if singular.
pub fn random_group_element(rng: &mut impl Rng, size: usize, bound: i64) -> Option<GroupElement> {
    let data = (0..size * size)
        .map(|_| Rational::from_integer(rng.gen_range(-bound..=bound).into()))
        .collect();
    let m = RationalMatrix::new(size, size, data).ok()?;
    GroupElement::new(m).ok()
}

/// Nonsingular samples drawn with the configured sampler, skipping singular
/// draws; at most `cfg.trials` draws.
pub fn sample_group_elements(size: usize, cfg: &SamplerConfig) -> Result<Vec<GroupElement>> {
    cfg.validate()?;
    let mut rng = cfg.rng();
    Ok((0..cfg.trials)
        .filter_map(|_| random_group_element(&mut rng, size, cfg.entry_bound))
        .collect())
}

/// Union of the states of `g.v` over sampled `g`, starting from `v` itself,
/// until `stall` consecutive samples add nothing or `trials` draws are spent.
pub fn generic_state_sample(
    source: &StateSource,
    cfg: &SamplerConfig,
) -> Result<(State, SamplerCertificate)> {
    cfg.validate()?;
    let size = source.context().nvars();
    let mut rng = cfg.rng();
    let mut current = source.state()?;
    let mut since_new = 0;
    let mut singular = 0;
    let mut used = 0;
    let mut stopped_by = StopReason::TrialLimit;
    while used < cfg.trials {
        used += 1;
        let Some(g) = random_group_element(&mut rng, size, cfg.entry_bound) else {
            singular += 1;
            continue;
        };
        let observed = source.state_under(&g)?;
        if observed.is_subset(&current) {
            since_new += 1;
        } else {
            current = current.union(&observed);
            since_new = 0;
        }
        if since_new >= cfg.stall {
            stopped_by = StopReason::Stall;
            break;
        }
    }
    if singular == used {
        return Err(Error::SamplerExhausted { trials: used });
    }
    Ok((
        current,
        SamplerCertificate {
            seed: cfg.seed,
            entry_bound: cfg.entry_bound,
            stall_window: cfg.stall,
            trials_used: used,
            singular_draws: singular,
            final_stall: since_new,
            stopped_by,
        },
    ))
}

/// One bucket of the empirical stratification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub state: State,
    /// Weights of the representation missing from the state.
    pub complement: Vec<WeightVector>,
    pub members: Vec<GroupElement>,
    /// True for the bucket whose state contains every other observed state.
    pub distinguished: bool,
}

/// Groups the supplied coordinate changes by the state of `g.v`.
pub fn stratify_samples(source: &StateSource, gs: &[GroupElement]) -> Result<Vec<Stratum>> {
    if gs.is_empty() {
        return Err(Error::EmptyInput("group elements"));
    }
    let full = source.full_weight_set()?;
    let mut buckets: BTreeMap<State, Vec<GroupElement>> = BTreeMap::new();
    for g in gs {
        buckets.entry(source.state_under(g)?).or_default().push(g.clone());
    }
    let states: Vec<State> = buckets.keys().cloned().collect();
    Ok(buckets
        .into_iter()
        .map(|(state, members)| {
            let distinguished = states.iter().all(|s| s.is_subset(&state));
            Stratum {
                complement: state.complement_in(&full),
                state,
                members,
                distinguished,
            }
        })
        .collect())
}

/// Certificate vocabulary. Only the generic verdicts carry a guarantee for
/// all tori; the others refer to the tori actually examined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Unstable,
    SemistableWrtExploredTori,
    GenericallySemistable,
    GenericallyStable,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Unstable => "UNSTABLE",
            Verdict::SemistableWrtExploredTori => "SEMISTABLE_WRT_EXPLORED_TORI",
            Verdict::GenericallySemistable => "GENERICALLY_SEMISTABLE",
            Verdict::GenericallyStable => "GENERICALLY_STABLE",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericCheck {
    pub verdict: Verdict,
    pub state: State,
    pub contains_origin: bool,
    /// Only computed by the stability check.
    pub origin_in_interior: Option<bool>,
    pub nearest: MinNormResult,
    pub certificate: SamplerCertificate,
}

/// Semistability of the sampled generic state. A hull missing the origin is
/// reported as inconclusive, never as a refutation: the sample may be short.
pub fn check_generic_semistable(source: &StateSource, cfg: &SamplerConfig) -> Result<GenericCheck> {
    let (state, certificate) = generic_state_sample(source, cfg)?;
    let nearest = min_norm_point(&state.point_set());
    let contains = nearest.norm_squared.is_zero();
    Ok(GenericCheck {
        verdict: if contains {
            Verdict::GenericallySemistable
        } else {
            Verdict::Inconclusive
        },
        state,
        contains_origin: contains,
        origin_in_interior: None,
        nearest,
        certificate,
    })
}

/// Stability of the sampled generic state (SL mode only).
pub fn check_generic_stable(source: &StateSource, cfg: &SamplerConfig) -> Result<GenericCheck> {
    if source.context().mode() != Mode::SL {
        return Err(Error::ModeMismatch("SL"));
    }
    let (state, certificate) = generic_state_sample(source, cfg)?;
    let set = state.point_set();
    let nearest = min_norm_point(&set);
    let contains = contains_origin(&set);
    let interior = origin_in_interior(&set);
    let verdict = match (interior, contains) {
        (true, _) => Verdict::GenericallyStable,
        (false, true) => Verdict::GenericallySemistable,
        (false, false) => Verdict::Inconclusive,
    };
    Ok(GenericCheck {
        verdict,
        state,
        contains_origin: contains,
        origin_in_interior: Some(interior),
        nearest,
        certificate,
    })
}

/// Best destabilizer found over the tori `g^{-1} R g` for the supplied `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub g: GroupElement,
    pub worst: WorstResult,
    pub explored: usize,
    pub verdict: Verdict,
}

/// For each `g`, the worst one-parameter subgroup for the state of `g.v`;
/// keeps the farthest nearest point (first one on ties).
pub fn worst_1ps_search(source: &StateSource, gs: &[GroupElement]) -> Result<SearchResult> {
    let mut best: Option<(GroupElement, WorstResult)> = None;
    for g in gs {
        let worst = worst_1ps_for_torus(&source.state_under(g)?)?;
        let better = best
            .as_ref()
            .is_none_or(|(_, b)| worst.norm_squared > b.norm_squared);
        if better {
            best = Some((g.clone(), worst));
        }
    }
    let (g, worst) = best.ok_or(Error::EmptyInput("group elements"))?;
    let verdict = if worst.is_unstable() {
        Verdict::Unstable
    } else {
        Verdict::SemistableWrtExploredTori
    };
    Ok(SearchResult {
        g,
        worst,
        explored: gs.len(),
        verdict,
    })
}

/// Generators of the destabilizing cones of the tori `g^{-1} R g` for the
/// supplied `g`, as transported one-parameter subgroups. With enough `g`
/// these generate every destabilizing 1-PS; no finite choice is known in
/// general, so the result covers exactly the tori examined.
pub fn all_destab_generators(source: &StateSource, gs: &[GroupElement]) -> Result<Vec<Transported>> {
    let ctx = source.context();
    let mut out = Vec::new();
    for g in gs {
        for ray in destab_rays(&source.state_under(g)?).rays {
            out.push(transport_1ps(g, &OneParamSubgroup::new(ctx, ray)?));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::parse_polynomial_in;
    use crate::rational::frac;

    fn sl(n: usize) -> TorusContext {
        TorusContext::sl(n).unwrap()
    }

    fn form(text: &str, n: usize) -> StateSource {
        StateSource::form(sl(n), parse_polynomial_in(text, n + 1).unwrap()).unwrap()
    }

    #[test]
    fn power_of_linear_form_has_full_generic_state() {
        for d in 1..=4 {
            let src = form(&format!("x0^{d}"), 1);
            let (state, cert) = generic_state_sample(&src, &SamplerConfig::default()).unwrap();
            assert_eq!(state, hypersurface_generic_state(&sl(1), d).unwrap());
            assert_eq!(cert.seed, 0);
        }
    }

    #[test]
    fn generic_input_stops_after_one_window() {
        let src = form("x0^2 + x0*x1 + x1^2", 1);
        let cfg = SamplerConfig {
            stall: 3,
            ..SamplerConfig::default()
        };
        let (state, cert) = generic_state_sample(&src, &cfg).unwrap();
        assert_eq!(state, src.state().unwrap());
        assert_eq!(cert.stopped_by, StopReason::Stall);
        assert_eq!(cert.trials_used - cert.singular_draws, 3);
    }

    #[test]
    fn conic_generic_state_is_all_quadrics() {
        let src = form("x0*x2 - x1^2", 2);
        let (state, _) = generic_state_sample(&src, &SamplerConfig::default()).unwrap();
        assert_eq!(state, hypersurface_generic_state(&sl(2), 2).unwrap());
        // one explicit coordinate change already reaches it
        let g = GroupElement::new(RationalMatrix::from_i64(&[&[1, 2, 3], &[0, 3, 4], &[5, 6, 0]]).unwrap())
            .unwrap();
        assert_eq!(src.state_under(&g).unwrap(), state);
    }

    #[test]
    fn bad_config_rejected() {
        let src = form("x0", 1);
        let cfg = SamplerConfig {
            trials: 0,
            ..SamplerConfig::default()
        };
        assert!(generic_state_sample(&src, &cfg).is_err());
    }

    #[test]
    fn sampler_is_deterministic() {
        let src = form("x0^2*x1", 1);
        let cfg = SamplerConfig {
            seed: 42,
            ..SamplerConfig::default()
        };
        assert_eq!(
            generic_state_sample(&src, &cfg).unwrap(),
            generic_state_sample(&src, &cfg).unwrap()
        );
    }

    #[test]
    fn strata_examples() {
        let generic = form("x0^2 + x0*x1 + x1^2", 1);
        let strata = stratify_samples(&generic, &[GroupElement::identity(2).unwrap()]).unwrap();
        assert_eq!(strata.len(), 1);
        assert!(strata[0].complement.is_empty());
        assert!(strata[0].distinguished);

        let hyper = form("x0", 2);
        let g = GroupElement::new(RationalMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).unwrap())
            .unwrap();
        let strata = stratify_samples(&hyper, &[GroupElement::identity(3).unwrap(), g]).unwrap();
        assert_eq!(strata.len(), 2);
        assert_eq!(strata.iter().filter(|s| s.distinguished).count(), 1);
        let dense = strata.iter().find(|s| s.distinguished).unwrap();
        assert!(dense.complement.is_empty());

        let cubic = form("x0^2*x1", 1);
        let perms = [
            GroupElement::permutation(&[0, 1]).unwrap(),
            GroupElement::permutation(&[1, 0]).unwrap(),
        ];
        let strata = stratify_samples(&cubic, &perms).unwrap();
        assert_eq!(strata.len(), 2);
        assert!(strata.iter().all(|s| !s.distinguished && s.members.len() == 1));
    }

    #[test]
    fn generic_verdicts() {
        let cfg = SamplerConfig::default();
        let hyper = form("x0", 3);
        assert_eq!(
            check_generic_semistable(&hyper, &cfg).unwrap().verdict,
            Verdict::GenericallySemistable
        );
        assert_eq!(
            check_generic_stable(&hyper, &cfg).unwrap().verdict,
            Verdict::GenericallyStable
        );
        let gl = StateSource::form(
            TorusContext::new(1, Mode::GL).unwrap(),
            parse_polynomial_in("x0", 2).unwrap(),
        )
        .unwrap();
        assert_eq!(check_generic_stable(&gl, &cfg), Err(Error::ModeMismatch("SL")));
        assert_eq!(
            check_generic_semistable(&gl, &cfg).unwrap().verdict,
            Verdict::Inconclusive
        );
    }

    #[test]
    fn full_wedge_is_not_generically_stable() {
        let ideal = IdealInput::new(
            2,
            vec![
                parse_polynomial_in("x0", 2).unwrap(),
                parse_polynomial_in("x1", 2).unwrap(),
            ],
        )
        .unwrap();
        let src = StateSource::hilbert_point(sl(1), ideal, 1, 1000).unwrap();
        let check = check_generic_stable(&src, &SamplerConfig::default()).unwrap();
        assert_eq!(check.origin_in_interior, Some(false));
        assert_ne!(check.verdict, Verdict::GenericallyStable);
    }

    #[test]
    fn search_examples() {
        let hyper = form("x0", 2);
        let r = worst_1ps_search(&hyper, &[GroupElement::identity(3).unwrap()]).unwrap();
        assert_eq!(r.verdict, Verdict::Unstable);
        assert_eq!(r.worst.norm_squared, frac(2, 3));

        let double_root = form("x0^2*x1", 1);
        let r = worst_1ps_search(&double_root, &[GroupElement::identity(2).unwrap()]).unwrap();
        assert_eq!(r.worst.norm_squared, frac(1, 2));

        let generic_cubic = form("x0^3 + x0^2*x1 - 2*x0*x1^2 + 3*x1^3", 1);
        let gs = sample_group_elements(2, &SamplerConfig::default()).unwrap();
        let r = worst_1ps_search(&generic_cubic, &gs).unwrap();
        assert_eq!(r.verdict, Verdict::SemistableWrtExploredTori);
        assert!(r.worst.norm_squared.is_zero());
        assert!(worst_1ps_search(&generic_cubic, &[]).is_err());
    }

    #[test]
    fn transported_generators_never_stabilize() {
        let src = form("x0^2*x1 + x0*x2^2", 2);
        let StateSource::Form { form: f, .. } = &src else {
            unreachable!()
        };
        let gs = sample_group_elements(
            3,
            &SamplerConfig {
                trials: 4,
                ..SamplerConfig::default()
            },
        )
        .unwrap();
        let mut all = vec![GroupElement::identity(3).unwrap()];
        all.extend(gs);
        let gens = all_destab_generators(&src, &all).unwrap();
        assert!(!gens.is_empty());
        for t in &gens {
            assert!(crate::gitcore::hm_index_transported(f, t).unwrap() <= Rational::zero());
        }
    }
}
