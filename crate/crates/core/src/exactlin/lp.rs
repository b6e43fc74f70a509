//! Exact two-phase simplex over the rationals with Bland's rule.
//!
//! Problems here are tiny (a few dozen constraints) but must be decided
//! exactly, so the tableau is dense `BigRational` and anti-cycling comes from
//! Bland's smallest-index rule rather than from perturbation.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// Maximize `objective · x` subject to the constraints. Variables are free
/// unless marked nonnegative.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    nvars: usize,
    nonnegative: Vec<bool>,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, point: Vec<Rational> },
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

impl LinearProgram {
    pub fn new(nvars: usize) -> Self {
        LinearProgram {
            nvars,
            nonnegative: vec![false; nvars],
            objective: vec![Rational::zero(); nvars],
            constraints: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn set_nonnegative(&mut self, var: usize) {
        self.nonnegative[var] = true;
    }

    pub fn set_objective(&mut self, objective: Vec<Rational>) {
        assert_eq!(objective.len(), self.nvars);
        self.objective = objective;
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.nvars);
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    /// Column layout after splitting free variables: `(plus, Some(minus))`.
    fn columns(&self) -> Vec<(usize, Option<usize>)> {
        let mut next = 0;
        (0..self.nvars)
            .map(|v| {
                let p = next;
                next += 1;
                if self.nonnegative[v] {
                    (p, None)
                } else {
                    next += 1;
                    (p, Some(p + 1))
                }
            })
            .collect()
    }

    pub fn solve(&self) -> LpOutcome {
        let cols = self.columns();
        let nstruct = cols.last().map_or(0, |&(p, m)| m.unwrap_or(p) + 1);
        let m = self.constraints.len();

        // Normalize to nonnegative right-hand sides.
        let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = Vec::with_capacity(m);
        for c in &self.constraints {
            let mut a = vec![Rational::zero(); nstruct];
            for (v, &(p, mi)) in cols.iter().enumerate() {
                a[p] = c.coeffs[v].clone();
                if let Some(mi) = mi {
                    a[mi] = -c.coeffs[v].clone();
                }
            }
            let (a, rel, b) = if c.rhs.is_negative() {
                let rel = match c.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                (a.into_iter().map(|x| -x).collect(), rel, -c.rhs.clone())
            } else {
                (a, c.relation, c.rhs.clone())
            };
            rows.push((a, rel, b));
        }

        let nslack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let nart = rows.iter().filter(|r| r.1 != Relation::Le).count();
        let art_start = nstruct + nslack;
        let width = art_start + nart;

        let mut tab = Tableau { t: Vec::with_capacity(m), basis: Vec::with_capacity(m), width };
        let (mut s, mut a) = (nstruct, art_start);
        for (coeffs, rel, b) in rows {
            let mut row = coeffs;
            row.resize(width + 1, Rational::zero());
            row[width] = b;
            match rel {
                Relation::Le => {
                    row[s] = Rational::one();
                    tab.basis.push(s);
                    s += 1;
                }
                Relation::Ge => {
                    row[s] = -Rational::one();
                    s += 1;
                    row[a] = Rational::one();
                    tab.basis.push(a);
                    a += 1;
                }
                Relation::Eq => {
                    row[a] = Rational::one();
                    tab.basis.push(a);
                    a += 1;
                }
            }
            tab.t.push(row);
        }

        // Phase one: maximize -(sum of artificials).
        if nart > 0 {
            let mut cost = vec![Rational::zero(); width];
            for c in cost.iter_mut().skip(art_start) {
                *c = -Rational::one();
            }
            let res = tab.optimize(&cost, width);
            debug_assert!(res.is_some(), "phase one is bounded");
            if tab.value(&cost).is_negative() {
                return LpOutcome::Infeasible;
            }
            tab.evict_artificials(art_start);
        }

        let mut cost = vec![Rational::zero(); width];
        for (v, &(p, mi)) in cols.iter().enumerate() {
            cost[p] = self.objective[v].clone();
            if let Some(mi) = mi {
                cost[mi] = -self.objective[v].clone();
            }
        }
        if tab.optimize(&cost, art_start).is_none() {
            return LpOutcome::Unbounded;
        }
        let value = tab.value(&cost);
        let mut x = vec![Rational::zero(); width];
        for (i, &b) in tab.basis.iter().enumerate() {
            x[b] = tab.t[i][width].clone();
        }
        let point = cols
            .iter()
            .map(|&(p, mi)| match mi {
                Some(mi) => &x[p] - &x[mi],
                None => x[p].clone(),
            })
            .collect();
        LpOutcome::Optimal { value, point }
    }

    pub fn is_feasible(&self) -> bool {
        let mut p = self.clone();
        p.objective = vec![Rational::zero(); self.nvars];
        p.solve().is_feasible()
    }
}

struct Tableau {
    t: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn value(&self, cost: &[Rational]) -> Rational {
        self.basis.iter().enumerate().fold(Rational::zero(), |acc, (i, &b)| acc + &cost[b] * &self.t[i][self.width])
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let inv = self.t[r][e].recip();
        for x in self.t[r].iter_mut() {
            *x *= &inv;
        }
        let prow = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[e].is_zero() {
                continue;
            }
            let f = row[e].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = e;
    }

    /// Runs simplex iterations over columns `0..allowed`. Returns `None` when
    /// the objective is unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> Option<()> {
        loop {
            // Reduced costs c_j - c_B B^{-1} A_j; enter on the first positive.
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut r = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.t[i][j].is_zero() {
                        r -= &cost[b] * &self.t[i][j];
                    }
                }
                r.is_positive()
            });
            let Some(e) = entering else {
                return Some(());
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.t.len() {
                let a = &self.t[i][e];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.t[i][self.width] / a;
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < lr || (ratio == lr && self.basis[i] < self.basis[li]) {
                            Some((i, ratio))
                        } else {
                            Some((li, lr))
                        }
                    }
                };
            }
            let (r, _) = leave?;
            self.pivot(r, e);
        }
    }

    /// After a successful phase one, pivots zero-valued artificials out of the
    /// basis, dropping rows that turn out to be redundant.
    fn evict_artificials(&mut self, art_start: usize) {
        let mut i = 0;
        while i < self.t.len() {
            if self.basis[i] >= art_start {
                match (0..art_start).find(|&j| !self.t[i][j].is_zero()) {
                    Some(j) => self.pivot(i, j),
                    None => {
                        self.t.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }
}
