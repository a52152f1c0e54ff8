//! Dense two-phase simplex over arbitrary-precision rationals with Bland's
//! anti-cycling rule. Every answer is exact.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::form::Relation;

pub type Q = BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpConstraint {
    pub coeffs: Vec<Q>,
    pub relation: Relation,
    pub rhs: Q,
}

/// Constraints over `vars` variables, each either free or nonnegative, with
/// an optional objective to minimize.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpProblem {
    vars: usize,
    nonneg: Vec<bool>,
    constraints: Vec<LpConstraint>,
    objective: Option<Vec<Q>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    /// A feasible point; optimal (with its value) when an objective is set.
    Feasible { point: Vec<Q>, objective: Option<Q> },
    Infeasible,
    /// The objective is unbounded below on a nonempty feasible region.
    Unbounded,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpOutcome::Feasible { .. })
    }
}

impl LpProblem {
    /// `vars` free variables.
    pub fn new(vars: usize) -> Self {
        LpProblem {
            vars,
            nonneg: vec![false; vars],
            constraints: Vec::new(),
            objective: None,
        }
    }

    /// `vars` nonnegative variables.
    pub fn nonnegative(vars: usize) -> Self {
        LpProblem {
            nonneg: vec![true; vars],
            ..Self::new(vars)
        }
    }

    pub fn set_nonnegative(&mut self, var: usize, nonneg: bool) {
        self.nonneg[var] = nonneg;
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn constraints(&self) -> &[LpConstraint] {
        &self.constraints
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Q>, relation: Relation, rhs: Q) -> Result<()> {
        if coeffs.len() != self.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                found: coeffs.len(),
            });
        }
        self.constraints.push(LpConstraint { coeffs, relation, rhs });
        Ok(())
    }

    /// Minimize `c · x`.
    pub fn minimize(&mut self, c: Vec<Q>) -> Result<()> {
        if c.len() != self.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                found: c.len(),
            });
        }
        self.objective = Some(c);
        Ok(())
    }

    /// Exact check of a candidate point against every constraint and sign
    /// restriction.
    pub fn is_satisfied_by(&self, point: &[Q]) -> bool {
        point.len() == self.vars
            && point.iter().zip(&self.nonneg).all(|(x, &nn)| !nn || !x.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs = dot(&c.coeffs, point);
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                }
            })
    }

    pub fn solve(&self) -> LpOutcome {
        Simplex::build(self).solve(self)
    }
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter()
        .zip(b)
        .filter(|(x, _)| !x.is_zero())
        .fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Feasibility (and optimality, when an objective is set) of `p`.
pub fn lp_feasible(p: &LpProblem) -> LpOutcome {
    p.solve()
}

struct Simplex {
    /// Each row holds `ncols` coefficients followed by the right-hand side.
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    ncols: usize,
    /// First artificial column; columns `>= artificial_from` are artificial.
    artificial_from: usize,
    /// Tableau column(s) of each variable: `(positive part, negative part)`.
    var_cols: Vec<(usize, Option<usize>)>,
}

impl Simplex {
    fn build(p: &LpProblem) -> Self {
        let mut var_cols = Vec::with_capacity(p.vars);
        let mut next = 0;
        for &nn in &p.nonneg {
            if nn {
                var_cols.push((next, None));
                next += 1;
            } else {
                var_cols.push((next, Some(next + 1)));
                next += 2;
            }
        }
        let structural = next;
        let slack_count = p.constraints.iter().filter(|c| c.relation != Relation::Eq).count();

        // rows that cannot start with a slack in the basis get an artificial
        let mut needs_artificial = Vec::with_capacity(p.constraints.len());
        for c in &p.constraints {
            let negate = c.rhs.is_negative();
            let slack_sign_positive = match c.relation {
                Relation::Le => !negate,
                Relation::Ge => negate,
                Relation::Eq => false,
            };
            needs_artificial.push(!slack_sign_positive);
        }
        let artificial_from = structural + slack_count;
        let ncols = artificial_from + needs_artificial.iter().filter(|&&a| a).count();

        let mut rows = Vec::with_capacity(p.constraints.len());
        let mut basis = Vec::with_capacity(p.constraints.len());
        let (mut slack, mut art) = (structural, artificial_from);
        for (c, &needs_art) in p.constraints.iter().zip(&needs_artificial) {
            let mut row = vec![Q::zero(); ncols + 1];
            for (v, a) in c.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let (pos, neg) = var_cols[v];
                row[pos] = a.clone();
                if let Some(neg) = neg {
                    row[neg] = -a.clone();
                }
            }
            let mut slack_col = None;
            match c.relation {
                Relation::Le => row[slack] = Q::one(),
                Relation::Ge => row[slack] = -Q::one(),
                Relation::Eq => {}
            }
            if c.relation != Relation::Eq {
                slack_col = Some(slack);
                slack += 1;
            }
            row[ncols] = c.rhs.clone();
            if c.rhs.is_negative() {
                for x in row.iter_mut() {
                    *x = -x.clone();
                }
            }
            if needs_art {
                row[art] = Q::one();
                basis.push(art);
                art += 1;
            } else {
                basis.push(slack_col.expect("rows without artificial have a slack"));
            }
            rows.push(row);
        }
        Simplex {
            rows,
            basis,
            ncols,
            artificial_from,
            var_cols,
        }
    }

    fn solve(mut self, p: &LpProblem) -> LpOutcome {
        // phase 1: minimize the sum of artificials
        if self.artificial_from < self.ncols {
            let mut obj = vec![Q::zero(); self.ncols + 1];
            for x in &mut obj[self.artificial_from..self.ncols] {
                *x = Q::one();
            }
            for i in 0..self.rows.len() {
                if self.basis[i] >= self.artificial_from {
                    subtract_scaled(&mut obj, &self.rows[i], &Q::one());
                }
            }
            let bounded = self.run(&mut obj, self.ncols);
            debug_assert!(bounded, "phase 1 is bounded below by zero");
            if !obj[self.ncols].is_zero() {
                return LpOutcome::Infeasible;
            }
            self.drive_out_artificials();
        }

        let mut objective = None;
        if let Some(c) = &p.objective {
            let mut obj = vec![Q::zero(); self.ncols + 1];
            for (v, a) in c.iter().enumerate() {
                let (pos, neg) = self.var_cols[v];
                obj[pos] = a.clone();
                if let Some(neg) = neg {
                    obj[neg] = -a.clone();
                }
            }
            for i in 0..self.rows.len() {
                let cb = obj[self.basis[i]].clone();
                if !cb.is_zero() {
                    subtract_scaled(&mut obj, &self.rows[i], &cb);
                }
            }
            if !self.run(&mut obj, self.artificial_from) {
                return LpOutcome::Unbounded;
            }
            objective = Some(c.clone());
        }

        let mut col_value = vec![Q::zero(); self.ncols];
        for (i, &b) in self.basis.iter().enumerate() {
            col_value[b] = self.rows[i][self.ncols].clone();
        }
        let point: Vec<Q> = self
            .var_cols
            .iter()
            .map(|&(pos, neg)| match neg {
                Some(neg) => &col_value[pos] - &col_value[neg],
                None => col_value[pos].clone(),
            })
            .collect();
        let objective = objective.map(|c| dot(&c, &point));
        LpOutcome::Feasible { point, objective }
    }

    /// Runs simplex iterations on `obj` (reduced costs, last entry is minus
    /// the objective value) over columns `< allowed`. Returns false when
    /// unbounded.
    fn run(&mut self, obj: &mut [Q], allowed: usize) -> bool {
        loop {
            // Bland: lowest-index improving column
            let Some(enter) = (0..allowed).find(|&j| obj[j].is_negative()) else {
                return true;
            };
            // Bland: minimum ratio, ties broken by lowest basic index
            let mut leave: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                let a = &row[enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &row[self.ncols] / a;
                let better = match &leave {
                    None => true,
                    Some((r, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return false;
            };
            self.pivot(r, enter, Some(obj));
        }
    }

    fn pivot(&mut self, r: usize, c: usize, obj: Option<&mut [Q]>) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row: Vec<(usize, Q)> = self.rows[r]
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x.clone()))
            .collect();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (j, x) in &pivot_row {
                    row[*j] -= &factor * x;
                }
            }
        }
        if let Some(obj) = obj {
            if !obj[c].is_zero() {
                let factor = obj[c].clone();
                for (j, x) in &pivot_row {
                    obj[*j] -= &factor * x;
                }
            }
        }
        self.basis[r] = c;
    }

    /// After a successful phase 1 every artificial in the basis sits at zero.
    /// Pivot each onto a non-artificial column, or drop its row when the row
    /// is redundant.
    fn drive_out_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] < self.artificial_from {
                i += 1;
                continue;
            }
            match (0..self.artificial_from).find(|&j| !self.rows[i][j].is_zero()) {
                Some(j) => {
                    self.pivot(i, j, None);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }
}

fn subtract_scaled(target: &mut [Q], row: &[Q], factor: &Q) {
    for (t, x) in target.iter_mut().zip(row) {
        if !x.is_zero() {
            *t -= factor * x;
        }
    }
}
