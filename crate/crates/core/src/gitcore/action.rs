//! The substitution action on forms and its effect on states and
//! one-parameter subgroups.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{GroupElement, OneParamSubgroup, State, WeightVector};
use crate::error::{Error, Result};
use crate::polyalg::{Monomial, Polynomial};
use crate::rational::Rational;

/// `g.f`, substituting `x_i -> sum_j g_{ji} x_j`.
pub fn act_on_form(g: &GroupElement, f: &Polynomial) -> Result<Polynomial> {
    let nvars = f.nvars();
    if g.size() != nvars {
        return Err(Error::DimensionMismatch {
            expected: nvars,
            found: g.size(),
        });
    }
    let images: Vec<Polynomial> = (0..nvars)
        .map(|i| {
            let mut p = Polynomial::zero(nvars);
            for j in 0..nvars {
                p.add_term(Monomial::var(nvars, j), g.matrix()[(j, i)].clone());
            }
            p
        })
        .collect();
    let mut powers: Vec<Vec<Polynomial>> = images
        .iter()
        .map(|_| vec![Polynomial::constant(nvars, Rational::from_integer(1.into()))])
        .collect();
    let mut out = Polynomial::zero(nvars);
    for (mono, c) in f.terms() {
        let mut prod = Polynomial::constant(nvars, c.clone());
        for (i, &e) in mono.exponents().iter().enumerate() {
            let e = e as usize;
            while powers[i].len() <= e {
                let next = powers[i].last().expect("nonempty").mul(&images[i]);
                powers[i].push(next);
            }
            prod = prod.mul(&powers[i][e]);
        }
        out = out.add(&prod);
    }
    Ok(out)
}

/// For a monomial matrix `g`, returns `sigma` with `g.x_i` a multiple of `x_{sigma(i)}`.
fn monomial_permutation(g: &GroupElement) -> Result<Vec<usize>> {
    let size = g.size();
    let mut sigma = Vec::with_capacity(size);
    for i in 0..size {
        let mut rows = (0..size).filter(|&j| !g.matrix()[(j, i)].is_zero());
        match (rows.next(), rows.next()) {
            (Some(j), None) => sigma.push(j),
            _ => return Err(Error::NotMonomialMatrix),
        }
    }
    let mut seen = vec![false; size];
    for &j in &sigma {
        if std::mem::replace(&mut seen[j], true) {
            return Err(Error::NotMonomialMatrix);
        }
    }
    Ok(sigma)
}

/// Image of a state under a monomial matrix normalizing the torus: coordinate
/// `sigma(i)` of the image is coordinate `i` of the input.
pub fn pushforward_state(g: &GroupElement, state: &State) -> Result<State> {
    let size = state.context().nvars();
    if g.size() != size {
        return Err(Error::DimensionMismatch {
            expected: size,
            found: g.size(),
        });
    }
    let sigma = monomial_permutation(g)?;
    let weights = state.weights().map(|w| {
        let mut out = vec![Rational::zero(); size];
        for (i, x) in w.coords().iter().enumerate() {
            out[sigma[i]] = x.clone();
        }
        WeightVector(out)
    });
    State::new(*state.context(), weights)
}

/// A one-parameter subgroup `t -> g^{-1} rho(t) g` of the conjugate torus
/// `g^{-1} R g`, stored as the pair `(g, rho)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transported {
    pub conjugator: GroupElement,
    pub rho: OneParamSubgroup,
}

pub fn transport_1ps(g: &GroupElement, rho: &OneParamSubgroup) -> Transported {
    Transported {
        conjugator: g.clone(),
        rho: rho.clone(),
    }
}

/// Polynomial in `x` whose coefficients are Laurent polynomials in `t`,
/// keyed by the power of `t`.
type LaurentForm = BTreeMap<i64, Polynomial>;

fn laurent_mul(a: &LaurentForm, b: &LaurentForm) -> LaurentForm {
    let mut out: LaurentForm = BTreeMap::new();
    for (ea, pa) in a {
        for (eb, pb) in b {
            let prod = pa.mul(pb);
            let entry = out.entry(ea + eb).or_insert_with(|| Polynomial::zero(pa.nvars()));
            *entry = entry.add(&prod);
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// Hilbert–Mumford index of `f` for a transported one-parameter subgroup,
/// computed directly: expand `(g^{-1} rho(t) g).f` and read off the lowest
/// power of `t`.
pub fn hm_index_transported(f: &Polynomial, t: &Transported) -> Result<Rational> {
    let nvars = f.nvars();
    let g = &t.conjugator;
    if g.size() != nvars || t.rho.coords().len() != nvars {
        return Err(Error::DimensionMismatch {
            expected: nvars,
            found: g.size(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroVector);
    }
    let ginv = g.inverse();
    let rho: Vec<i64> = t
        .rho
        .coords()
        .iter()
        .map(|c| i64::try_from(c).map_err(|_| Error::InvalidArgument("rho entry too large".into())))
        .collect::<Result<_>>()?;
    // lambda(t).x_i = sum_j sum_k ginv_{jk} t^{rho_k} g_{ki} x_j
    let images: Vec<LaurentForm> = (0..nvars)
        .map(|i| {
            let mut form: LaurentForm = BTreeMap::new();
            for (k, &rk) in rho.iter().enumerate() {
                let gki = &g.matrix()[(k, i)];
                if gki.is_zero() {
                    continue;
                }
                let mut p = Polynomial::zero(nvars);
                for j in 0..nvars {
                    p.add_term(Monomial::var(nvars, j), &ginv.matrix()[(j, k)] * gki);
                }
                let entry = form.entry(rk).or_insert_with(|| Polynomial::zero(nvars));
                *entry = entry.add(&p);
            }
            form.retain(|_, p| !p.is_zero());
            form
        })
        .collect();
    let mut total: LaurentForm = BTreeMap::new();
    for (mono, c) in f.terms() {
        let mut prod: LaurentForm = BTreeMap::from([(0, Polynomial::constant(nvars, c.clone()))]);
        for (i, &e) in mono.exponents().iter().enumerate() {
            for _ in 0..e {
                prod = laurent_mul(&prod, &images[i]);
            }
        }
        for (e, p) in prod {
            let entry = total.entry(e).or_insert_with(|| Polynomial::zero(nvars));
            *entry = entry.add(&p);
        }
    }
    total.retain(|_, p| !p.is_zero());
    let lowest = total.keys().next().copied().ok_or(Error::ZeroVector)?;
    Ok(Rational::from_integer((-lowest).into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::RationalMatrix;
    use crate::gitcore::{hm_index, project_weight, TorusContext};
    use crate::polyalg::{parse_polynomial_in, state_of_form};
    use crate::rational::frac;

    fn poly(text: &str, nvars: usize) -> Polynomial {
        parse_polynomial_in(text, nvars).unwrap()
    }

    #[test]
    fn identity_and_swap() {
        let f = poly("x0^2*x1", 2);
        let id = GroupElement::identity(2).unwrap();
        assert_eq!(act_on_form(&id, &f).unwrap(), f);
        let swap = GroupElement::permutation(&[1, 0]).unwrap();
        assert_eq!(act_on_form(&swap, &f).unwrap(), poly("x1^2*x0", 2));
    }

    #[test]
    fn shear_fixes_x0() {
        let g = GroupElement::new(RationalMatrix::from_i64(&[&[1, 1], &[0, 1]]).unwrap()).unwrap();
        assert_eq!(act_on_form(&g, &poly("x0", 2)).unwrap(), poly("x0", 2));
        assert_eq!(act_on_form(&g, &poly("x1", 2)).unwrap(), poly("x0 + x1", 2));
    }

    #[test]
    fn pushforward_examples() {
        let sl1 = TorusContext::sl(1).unwrap();
        let s = State::new(sl1, [project_weight(&sl1, &[2, 1]).unwrap()]).unwrap();
        let id = GroupElement::identity(2).unwrap();
        assert_eq!(pushforward_state(&id, &s).unwrap(), s);
        let swap = GroupElement::permutation(&[1, 0]).unwrap();
        let image = pushforward_state(&swap, &s).unwrap();
        assert_eq!(
            image.weights().next().unwrap().coords(),
            &[frac(-1, 2), frac(1, 2)]
        );

        let sl2 = TorusContext::sl(2).unwrap();
        let cycle = GroupElement::permutation(&[1, 2, 0]).unwrap();
        let x0 = state_of_form(&poly("x0", 3), &sl2).unwrap();
        let x1 = state_of_form(&poly("x1", 3), &sl2).unwrap();
        assert_eq!(pushforward_state(&cycle, &x0).unwrap(), x1);
    }

    #[test]
    fn scaled_permutation_is_monomial() {
        let sl1 = TorusContext::sl(1).unwrap();
        let s = State::new(sl1, [project_weight(&sl1, &[2, 1]).unwrap()]).unwrap();
        let g = GroupElement::new(RationalMatrix::from_i64(&[&[0, 3], &[-2, 0]]).unwrap()).unwrap();
        let f = poly("x0^2*x1", 2);
        assert_eq!(
            pushforward_state(&g, &s).unwrap(),
            state_of_form(&act_on_form(&g, &f).unwrap(), &sl1).unwrap()
        );
    }

    #[test]
    fn non_monomial_rejected() {
        let sl1 = TorusContext::sl(1).unwrap();
        let s = State::new(sl1, [project_weight(&sl1, &[2, 1]).unwrap()]).unwrap();
        let g = GroupElement::new(RationalMatrix::from_i64(&[&[1, 1], &[0, 1]]).unwrap()).unwrap();
        assert_eq!(pushforward_state(&g, &s), Err(Error::NotMonomialMatrix));
    }

    #[test]
    fn transport_relocates_hyperplane_destabilizer() {
        // g.x0 = x0 + x1 + x2, so g.f for f = x0 is a generic-looking linear form
        let ctx = TorusContext::sl(2).unwrap();
        let g = GroupElement::new(RationalMatrix::from_i64(&[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1]]).unwrap())
            .unwrap();
        let rho = OneParamSubgroup::from_i64(&ctx, &[2, -1, -1]).unwrap();
        let f = poly("x0", 3);
        let gf = act_on_form(&g, &f).unwrap();
        assert_eq!(gf, poly("x0 + x1 + x2", 3));
        // the standard torus no longer destabilizes g.f along rho
        assert!(hm_index(&state_of_form(&gf, &ctx).unwrap(), &rho) >= Rational::zero());
        // but the destabilizer of f lives on the conjugate torus g R g^{-1}
        let back = transport_1ps(&g.inverse(), &rho);
        assert_eq!(hm_index_transported(&gf, &back).unwrap(), frac(-2, 1));
        let id = transport_1ps(&GroupElement::identity(3).unwrap(), &rho);
        assert_eq!(id.rho, rho);
        assert_eq!(hm_index_transported(&f, &id).unwrap(), frac(-2, 1));
    }
}
