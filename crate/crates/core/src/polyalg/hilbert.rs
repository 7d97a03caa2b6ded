//! Degree pieces of homogeneous ideals and the torus weights of their
//! Plücker coordinates.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use super::{monomials_of_degree, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::exactla::RationalMatrix;
use crate::gitcore::{project_weight, State, TorusContext, WeightVector};
use crate::rational::{dot, Rational};

/// Default cap on the number of `ell`-subsets examined by [`plucker_state`].
pub const DEFAULT_BUDGET: u128 = 2_000_000;

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Nonzero homogeneous generators of a graded ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealInput {
    nvars: usize,
    generators: Vec<Polynomial>,
}

impl IdealInput {
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyInput("ideal generators"));
        }
        let mut lifted = Vec::with_capacity(generators.len());
        for g in generators {
            if g.is_zero() {
                return Err(Error::ZeroVector);
            }
            if !g.is_homogeneous() {
                return Err(Error::NonHomogeneous);
            }
            lifted.push(g.with_nvars(nvars)?);
        }
        Ok(Self {
            nvars,
            generators: lifted,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn max_degree(&self) -> u32 {
        self.generators
            .iter()
            .filter_map(Polynomial::degree)
            .max()
            .unwrap_or(0)
    }
}

/// The degree-`m` piece `I_m` as the row space of a reduced echelon matrix
/// over the canonical monomial basis of `S_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreePiece {
    pub nvars: usize,
    pub m: u32,
    pub monomials: Vec<Monomial>,
    pub basis: RationalMatrix,
    pub ell: usize,
}

pub fn degree_piece(ideal: &IdealInput, m: u32) -> Result<DegreePiece> {
    let degree = ideal.max_degree();
    if m < degree {
        return Err(Error::DegreeTooSmall { m, degree });
    }
    let nvars = ideal.nvars;
    let monomials = monomials_of_degree(nvars, m);
    let index: HashMap<&Monomial, usize> = monomials.iter().enumerate().map(|(i, mo)| (mo, i)).collect();
    let mut rows = Vec::new();
    for g in &ideal.generators {
        let e = g.degree().expect("generators are nonzero");
        for shift in monomials_of_degree(nvars, m - e) {
            let mut row = vec![Rational::zero(); monomials.len()];
            for (mo, c) in g.mul_monomial(&shift).terms() {
                row[index[mo]] = c.clone();
            }
            rows.push(row);
        }
    }
    let r = RationalMatrix::from_rows(rows)?.rref();
    let basis_rows: Vec<Vec<Rational>> = (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect();
    Ok(DegreePiece {
        nvars,
        m,
        monomials,
        basis: RationalMatrix::from_rows(basis_rows)?,
        ell: r.rank,
    })
}

/// Incremental echelon basis of column vectors in `Q^ell`.
struct Echelon {
    // (pivot position, vector normalized so the pivot entry is 1)
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    fn reduce(&self, mut v: Vec<Rational>) -> Option<(usize, Vec<Rational>)> {
        for (p, r) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (a, b) in v.iter_mut().zip(r) {
                    *a -= &f * b;
                }
            }
        }
        let p = v.iter().position(|x| !x.is_zero())?;
        let inv = v[p].recip();
        v.iter_mut().for_each(|x| *x *= &inv);
        Some((p, v))
    }
}

/// Visits every `ell`-subset of monomial columns with nonzero maximal minor,
/// i.e. every basis of the column matroid, in lexicographic order.
pub fn for_each_basis(piece: &DegreePiece, budget: u128, mut visit: impl FnMut(&[usize])) -> Result<()> {
    let ncols = piece.monomials.len();
    let subsets = binomial(ncols as u64, piece.ell as u64);
    if subsets > budget {
        return Err(Error::TooLarge { subsets, budget });
    }
    let columns: Vec<Vec<Rational>> = (0..ncols).map(|j| piece.basis.column(j)).collect();

    fn rec(
        start: usize,
        ell: usize,
        columns: &[Vec<Rational>],
        chosen: &mut Vec<usize>,
        echelon: &mut Echelon,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if chosen.len() == ell {
            visit(chosen);
            return;
        }
        let needed = ell - chosen.len();
        for j in start..=columns.len() - needed {
            if let Some(row) = echelon.reduce(columns[j].clone()) {
                echelon.rows.push(row);
                chosen.push(j);
                rec(j + 1, ell, columns, chosen, echelon, visit);
                chosen.pop();
                echelon.rows.pop();
            }
        }
    }

    let mut echelon = Echelon { rows: Vec::new() };
    rec(
        0,
        piece.ell,
        &columns,
        &mut Vec::with_capacity(piece.ell),
        &mut echelon,
        &mut visit,
    );
    Ok(())
}

fn wedge_weight(monomials: &[Monomial], subset: &[usize]) -> Vec<i64> {
    let nvars = monomials[0].nvars();
    let mut sum = vec![0i64; nvars];
    for &j in subset {
        for (s, &e) in sum.iter_mut().zip(monomials[j].exponents()) {
            *s += i64::from(e);
        }
    }
    sum
}

/// Weights of the nonzero Plücker coordinates of `I_m`.
pub fn plucker_state(piece: &DegreePiece, ctx: &TorusContext, budget: u128) -> Result<State> {
    check_vars(ctx, piece.nvars)?;
    let mut sums: BTreeSet<Vec<i64>> = BTreeSet::new();
    for_each_basis(piece, budget, |subset| {
        sums.insert(wedge_weight(&piece.monomials, subset));
    })?;
    State::from_exponents(*ctx, sums.iter().map(Vec::as_slice))
}

/// Every weight of `wedge^ell S_m`, the full weight set the Plücker state is
/// drawn from.
pub fn all_wedge_weights(ctx: &TorusContext, m: u32, ell: usize, budget: u128) -> Result<State> {
    use itertools::Itertools;
    let monomials = monomials_of_degree(ctx.nvars(), m);
    let subsets = binomial(monomials.len() as u64, ell as u64);
    if subsets > budget {
        return Err(Error::TooLarge { subsets, budget });
    }
    if ell == 0 || ell > monomials.len() {
        return Err(Error::InvalidArgument(format!(
            "ell = {ell} outside 1..={}",
            monomials.len()
        )));
    }
    let sums: BTreeSet<Vec<i64>> = (0..monomials.len())
        .combinations(ell)
        .map(|s| wedge_weight(&monomials, &s))
        .collect();
    State::from_exponents(*ctx, sums.iter().map(Vec::as_slice))
}

/// Vertex of the state polytope of `I_m` maximizing `<w, .>`: the weight of
/// the initial subspace for the weight order `w` refined by lex.
pub fn vertex_oracle(piece: &DegreePiece, w: &[Rational], ctx: &TorusContext) -> Result<WeightVector> {
    check_vars(ctx, piece.nvars)?;
    if w.len() != piece.nvars {
        return Err(Error::DimensionMismatch {
            expected: piece.nvars,
            found: w.len(),
        });
    }
    let scores: Vec<Rational> = piece
        .monomials
        .iter()
        .map(|mo| {
            let e: Vec<Rational> = mo
                .exponents()
                .iter()
                .map(|&a| Rational::from_integer(a.into()))
                .collect();
            dot(w, &e)
        })
        .collect();
    let mut order: Vec<usize> = (0..piece.monomials.len()).collect();
    // stable sort keeps canonical (lex) order among ties
    order.sort_by(|&a, &b| scores[b].cmp(&scores[a]));
    let pivots = piece.basis.select_columns(&order)?.rref().pivot_columns;
    let chosen: Vec<usize> = pivots.iter().map(|&p| order[p]).collect();
    project_weight(ctx, &wedge_weight(&piece.monomials, &chosen))
}

/// Necessary condition for `wedge^ell S_m` to have a trivial-weight monomial:
/// `n + 1` divides `ell * m`.
pub fn trivial_weight_necessary(n: usize, m: u32, ell: usize) -> Result<bool> {
    if n == 0 || m == 0 || ell == 0 {
        return Err(Error::InvalidArgument("n, m and ell must be positive".into()));
    }
    let dim = binomial((n as u64) + u64::from(m), u64::from(m));
    if ell as u128 > dim {
        return Err(Error::InvalidArgument(format!(
            "ell = {ell} exceeds dim S_m = {dim}"
        )));
    }
    Ok((ell as u128 * u128::from(m)).is_multiple_of(n as u128 + 1))
}

/// Projected exponents of every degree-`d` monomial.
pub fn hypersurface_generic_state(ctx: &TorusContext, d: u32) -> Result<State> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let exps: Vec<Vec<i64>> = monomials_of_degree(ctx.nvars(), d)
        .iter()
        .map(Monomial::weight)
        .collect();
    State::from_exponents(*ctx, exps.iter().map(Vec::as_slice))
}

/// Projected exponents of the support of a nonzero homogeneous form.
pub fn state_of_form(f: &Polynomial, ctx: &TorusContext) -> Result<State> {
    check_vars(ctx, f.nvars())?;
    if f.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !f.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let exps: Vec<Vec<i64>> = f.support().map(Monomial::weight).collect();
    State::from_exponents(*ctx, exps.iter().map(Vec::as_slice))
}

fn check_vars(ctx: &TorusContext, nvars: usize) -> Result<()> {
    if ctx.nvars() != nvars {
        return Err(Error::DimensionMismatch {
            expected: ctx.nvars(),
            found: nvars,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::parse_polynomial_in;
    use crate::rational::{frac, int};

    fn conic_ideal() -> IdealInput {
        IdealInput::new(3, vec![parse_polynomial_in("x0*x2 - x1^2", 3).unwrap()]).unwrap()
    }

    fn sl(n: usize) -> TorusContext {
        TorusContext::sl(n).unwrap()
    }

    fn w(ctx: &TorusContext, e: &[i64]) -> WeightVector {
        project_weight(ctx, e).unwrap()
    }

    #[test]
    fn degree_piece_dimensions() {
        assert_eq!(degree_piece(&conic_ideal(), 2).unwrap().ell, 1);
        assert_eq!(degree_piece(&conic_ideal(), 3).unwrap().ell, 3);
        let lin = IdealInput::new(
            2,
            vec![
                parse_polynomial_in("x0", 2).unwrap(),
                parse_polynomial_in("x1", 2).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(degree_piece(&lin, 1).unwrap().ell, 2);
        assert_eq!(
            degree_piece(&conic_ideal(), 1),
            Err(Error::DegreeTooSmall { m: 1, degree: 2 })
        );
    }

    #[test]
    fn ideal_validation() {
        assert_eq!(
            IdealInput::new(2, vec![parse_polynomial_in("x0 + x1^2", 2).unwrap()]),
            Err(Error::NonHomogeneous)
        );
        assert!(IdealInput::new(2, vec![]).is_err());
    }

    #[test]
    fn conic_plucker_state() {
        let ctx = sl(2);
        let piece = degree_piece(&conic_ideal(), 2).unwrap();
        let s = plucker_state(&piece, &ctx, DEFAULT_BUDGET).unwrap();
        let expected = State::new(ctx, [w(&ctx, &[1, 0, 1]), w(&ctx, &[0, 2, 0])]).unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn full_wedge_is_invariant() {
        let ctx = sl(1);
        let lin = IdealInput::new(
            2,
            vec![
                parse_polynomial_in("x0", 2).unwrap(),
                parse_polynomial_in("x1", 2).unwrap(),
            ],
        )
        .unwrap();
        let piece = degree_piece(&lin, 1).unwrap();
        let s = plucker_state(&piece, &ctx, DEFAULT_BUDGET).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.weights().next().unwrap().is_zero());
    }

    #[test]
    fn conic_at_degree_three_conserves_row_sums() {
        let gl = TorusContext::new(2, crate::gitcore::Mode::GL).unwrap();
        let piece = degree_piece(&conic_ideal(), 3).unwrap();
        let s = plucker_state(&piece, &gl, DEFAULT_BUDGET).unwrap();
        for wt in s.weights() {
            assert_eq!(wt.coords().iter().sum::<Rational>(), int(9));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let piece = degree_piece(&conic_ideal(), 3).unwrap();
        assert_eq!(
            plucker_state(&piece, &sl(2), 10),
            Err(Error::TooLarge {
                subsets: 120,
                budget: 10
            })
        );
    }

    #[test]
    fn vertex_oracle_examples() {
        let ctx = sl(2);
        let piece = degree_piece(&conic_ideal(), 2).unwrap();
        let v = vertex_oracle(&piece, &[int(1), int(0), int(0)], &ctx).unwrap();
        assert_eq!(v.coords(), &[frac(1, 3), frac(-2, 3), frac(1, 3)]);
        let v = vertex_oracle(&piece, &[int(0), int(1), int(0)], &ctx).unwrap();
        assert_eq!(v.coords(), &[frac(-2, 3), frac(4, 3), frac(-2, 3)]);
        let piece3 = degree_piece(&conic_ideal(), 3).unwrap();
        let s = plucker_state(&piece3, &ctx, DEFAULT_BUDGET).unwrap();
        let v = vertex_oracle(&piece3, &[int(0), int(0), int(0)], &ctx).unwrap();
        assert!(s.contains(&v));
    }

    #[test]
    fn trivial_weight_examples() {
        assert_eq!(trivial_weight_necessary(1, 2, 2), Ok(true));
        assert_eq!(trivial_weight_necessary(1, 3, 1), Ok(false));
        assert_eq!(trivial_weight_necessary(2, 3, 2), Ok(true));
        assert!(trivial_weight_necessary(1, 1, 3).is_err());
    }

    #[test]
    fn hypersurface_states() {
        let s = hypersurface_generic_state(&sl(1), 2).unwrap();
        let expected = State::new(
            sl(1),
            [w(&sl(1), &[2, 0]), w(&sl(1), &[1, 1]), w(&sl(1), &[0, 2])],
        )
        .unwrap();
        assert_eq!(s, expected);
        assert_eq!(hypersurface_generic_state(&sl(2), 1).unwrap().len(), 3);
        for n in 1..4usize {
            for d in 1..5u32 {
                let s = hypersurface_generic_state(&sl(n), d).unwrap();
                assert_eq!(s.len() as u128, binomial((n as u64) + u64::from(d), u64::from(d)));
            }
        }
    }

    #[test]
    fn form_states() {
        let ctx = sl(2);
        let conic = parse_polynomial_in("x0*x2 - x1^2", 3).unwrap();
        assert_eq!(state_of_form(&conic, &ctx).unwrap().len(), 2);
        let power = parse_polynomial_in("x0^3", 3).unwrap();
        assert_eq!(state_of_form(&power, &ctx).unwrap().len(), 1);
        let all = monomials_of_degree(3, 3)
            .into_iter()
            .fold(Polynomial::zero(3), |acc, m| {
                acc.add(&Polynomial::term(m, int(1)))
            });
        assert_eq!(
            state_of_form(&all, &ctx).unwrap(),
            hypersurface_generic_state(&ctx, 3).unwrap()
        );
        assert_eq!(state_of_form(&Polynomial::zero(3), &ctx), Err(Error::ZeroVector));
        let mixed = parse_polynomial_in("x0 + x1^2", 3).unwrap();
        assert_eq!(state_of_form(&mixed, &ctx), Err(Error::NonHomogeneous));
    }
}
