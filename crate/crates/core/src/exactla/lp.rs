//! Two-phase dense tableau simplex over the rationals with Bland's rule.

use num_traits::{One, Signed, Zero};

use super::RationalMatrix;
use crate::error::{Error, Result};
use crate::rational::{dot, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowSense {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Free,
    NonNegative,
}

/// `maximize objective · x` subject to `matrix x (sense) rhs` row by row.
#[derive(Clone, Debug)]
pub struct LpProblem {
    objective: Vec<Rational>,
    matrix: RationalMatrix,
    rhs: Vec<Rational>,
    senses: Vec<RowSense>,
    bounds: Vec<Bound>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

impl LpProblem {
    pub fn new(
        objective: Vec<Rational>,
        matrix: RationalMatrix,
        rhs: Vec<Rational>,
        senses: Vec<RowSense>,
        bounds: Vec<Bound>,
    ) -> Result<Self> {
        let nvars = objective.len();
        if matrix.cols() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: matrix.cols(),
            });
        }
        if bounds.len() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: bounds.len(),
            });
        }
        for len in [rhs.len(), senses.len()] {
            if len != matrix.rows() {
                return Err(Error::DimensionMismatch {
                    expected: matrix.rows(),
                    found: len,
                });
            }
        }
        Ok(Self {
            objective,
            matrix,
            rhs,
            senses,
            bounds,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    pub fn senses(&self) -> &[RowSense] {
        &self.senses
    }

    pub fn bounds(&self) -> &[Bound] {
        &self.bounds
    }

    /// Exact feasibility check of a candidate point.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        if x.len() != self.num_vars() {
            return false;
        }
        let bounds_ok = self
            .bounds
            .iter()
            .zip(x)
            .all(|(b, v)| *b == Bound::Free || !v.is_negative());
        bounds_ok
            && (0..self.matrix.rows()).all(|i| {
                let lhs = dot(self.matrix.row(i), x);
                match self.senses[i] {
                    RowSense::Le => lhs <= self.rhs[i],
                    RowSense::Eq => lhs == self.rhs[i],
                    RowSense::Ge => lhs >= self.rhs[i],
                }
            })
    }
}

struct Tableau {
    // rows of B^{-1}[A | b]; last column is the right-hand side
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    ncols: usize,
}

enum Phase {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        self.basis[r] = c;
    }

    fn value(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (i, &b)| acc + &cost[b] * self.rhs(i))
    }

    /// Maximizes `cost · x` over the allowed columns.
    fn run(&mut self, cost: &[Rational], allowed: &[bool]) -> Phase {
        loop {
            let entering = (0..self.ncols).find(|&j| {
                if !allowed[j] || self.basis.contains(&j) {
                    return false;
                }
                let reduced = self
                    .basis
                    .iter()
                    .enumerate()
                    .fold(cost[j].clone(), |acc, (i, &b)| acc - &cost[b] * &self.rows[i][j]);
                reduced.is_positive()
            });
            let Some(c) = entering else {
                return Phase::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, c),
                None => return Phase::Unbounded,
            }
        }
    }
}

/// Solves the LP exactly. Free variables are split into two nonnegative parts.
pub fn solve_lp(problem: &LpProblem) -> LpOutcome {
    let nvars = problem.num_vars();
    // column layout: split variables, then slacks/surpluses, then artificials
    let mut var_cols: Vec<(usize, Option<usize>)> = Vec::with_capacity(nvars);
    let mut next = 0;
    for b in &problem.bounds {
        match b {
            Bound::NonNegative => {
                var_cols.push((next, None));
                next += 1;
            }
            Bound::Free => {
                var_cols.push((next, Some(next + 1)));
                next += 2;
            }
        }
    }
    let structural = next;
    let m = problem.matrix.rows();

    let mut normalized: Vec<(Vec<Rational>, Rational, RowSense)> = Vec::with_capacity(m);
    for i in 0..m {
        let mut coeffs = vec![Rational::zero(); structural];
        for (j, &(p, n)) in var_cols.iter().enumerate() {
            let a = &problem.matrix[(i, j)];
            coeffs[p] = a.clone();
            if let Some(n) = n {
                coeffs[n] = -a.clone();
            }
        }
        let mut rhs = problem.rhs[i].clone();
        let mut sense = problem.senses[i];
        if rhs.is_negative() {
            coeffs.iter_mut().for_each(|v| *v = -v.clone());
            rhs = -rhs;
            sense = match sense {
                RowSense::Le => RowSense::Ge,
                RowSense::Ge => RowSense::Le,
                RowSense::Eq => RowSense::Eq,
            };
        }
        normalized.push((coeffs, rhs, sense));
    }

    let slack_count = normalized.iter().filter(|r| r.2 != RowSense::Eq).count();
    let art_count = normalized.iter().filter(|r| r.2 != RowSense::Le).count();
    let ncols = structural + slack_count + art_count;
    let art_start = structural + slack_count;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let (mut slack, mut art) = (structural, art_start);
    for (coeffs, rhs, sense) in normalized {
        let mut row = coeffs;
        row.resize(ncols + 1, Rational::zero());
        match sense {
            RowSense::Le => {
                row[slack] = Rational::one();
                basis.push(slack);
                slack += 1;
            }
            RowSense::Ge => {
                row[slack] = -Rational::one();
                slack += 1;
                row[art] = Rational::one();
                basis.push(art);
                art += 1;
            }
            RowSense::Eq => {
                row[art] = Rational::one();
                basis.push(art);
                art += 1;
            }
        }
        row[ncols] = rhs;
        rows.push(row);
    }
    let mut t = Tableau { rows, basis, ncols };

    if art_count > 0 {
        let mut cost = vec![Rational::zero(); ncols];
        for c in cost.iter_mut().skip(art_start) {
            *c = -Rational::one();
        }
        let allowed = vec![true; ncols];
        // phase one is bounded above by zero
        t.run(&cost, &allowed);
        if t.value(&cost).is_negative() {
            return LpOutcome::Infeasible;
        }
        // drive zero-level artificials out of the basis, dropping redundant rows
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= art_start {
                match (0..art_start).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let mut cost = vec![Rational::zero(); ncols];
    for (j, &(p, n)) in var_cols.iter().enumerate() {
        cost[p] = problem.objective[j].clone();
        if let Some(n) = n {
            cost[n] = -problem.objective[j].clone();
        }
    }
    let allowed: Vec<bool> = (0..ncols).map(|j| j < art_start).collect();
    match t.run(&cost, &allowed) {
        Phase::Unbounded => LpOutcome::Unbounded,
        Phase::Optimal => {
            let mut values = vec![Rational::zero(); ncols];
            for (i, &b) in t.basis.iter().enumerate() {
                values[b] = t.rhs(i).clone();
            }
            let point: Vec<Rational> = var_cols
                .iter()
                .map(|&(p, n)| match n {
                    Some(n) => &values[p] - &values[n],
                    None => values[p].clone(),
                })
                .collect();
            LpOutcome::Optimal {
                value: dot(&problem.objective, &point),
                point,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, vec_of};

    fn one_var(rows: &[(i64, RowSense, i64)]) -> LpProblem {
        let m = RationalMatrix::from_rows(rows.iter().map(|r| vec![int(r.0)]).collect()).unwrap();
        LpProblem::new(
            vec![int(1)],
            m,
            rows.iter().map(|r| int(r.2)).collect(),
            rows.iter().map(|r| r.1).collect(),
            vec![Bound::NonNegative],
        )
        .unwrap()
    }

    #[test]
    fn bounded_single_variable() {
        let p = one_var(&[(1, RowSense::Le, 1), (1, RowSense::Ge, 0)]);
        assert_eq!(
            solve_lp(&p),
            LpOutcome::Optimal {
                value: int(1),
                point: vec![int(1)]
            }
        );
    }

    #[test]
    fn contradictory_bounds_are_infeasible() {
        let p = one_var(&[(1, RowSense::Le, 1), (1, RowSense::Ge, 2)]);
        assert_eq!(solve_lp(&p), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_direction() {
        let p = one_var(&[(1, RowSense::Ge, 1)]);
        assert_eq!(solve_lp(&p), LpOutcome::Unbounded);
    }

    #[test]
    fn strictly_positive_combination_of_conic_state() {
        // variables (l1, l2, eps); maximize eps
        let a = frac(1, 3);
        let b = frac(-2, 3);
        let c = frac(4, 3);
        let z = int(0);
        let o = int(1);
        let rows = vec![
            vec![a.clone(), b.clone(), z.clone()],
            vec![b.clone(), c.clone(), z.clone()],
            vec![a.clone(), b.clone(), z.clone()],
            vec![o.clone(), o.clone(), z.clone()],
            vec![o.clone(), z.clone(), -o.clone()],
            vec![z.clone(), o.clone(), -o.clone()],
        ];
        let p = LpProblem::new(
            vec_of(&[0, 0, 1]),
            RationalMatrix::from_rows(rows).unwrap(),
            vec_of(&[0, 0, 0, 1, 0, 0]),
            vec![
                RowSense::Eq,
                RowSense::Eq,
                RowSense::Eq,
                RowSense::Eq,
                RowSense::Ge,
                RowSense::Ge,
            ],
            vec![Bound::NonNegative, Bound::NonNegative, Bound::Free],
        )
        .unwrap();
        match solve_lp(&p) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, frac(1, 3));
                assert_eq!(point, vec![frac(2, 3), frac(1, 3), frac(1, 3)]);
                assert!(p.is_feasible(&point));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn mismatched_dimensions_rejected() {
        let m = RationalMatrix::from_i64(&[&[1, 1]]).unwrap();
        assert!(LpProblem::new(
            vec_of(&[1]),
            m,
            vec_of(&[1]),
            vec![RowSense::Le],
            vec![Bound::Free]
        )
        .is_err());
    }
}
