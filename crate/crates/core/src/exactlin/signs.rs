//! Sign-orthant feasibility over a row space and the variation extremes it
//! yields.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::lp::{LinearProgram, Relation};
use crate::exactlin::matrix::ExactMatrix;
use crate::exactlin::pluecker::require_full_row_rank;
use crate::par::{self, Strategy};
use crate::rational::Rational;
use crate::signvar::{var, varbar, Sign, SignPattern};

/// Whether some vector in the row space of `l` has signs `tau` on its first
/// `tau.len()` coordinates. Because the row space is a cone, strict signs can
/// be normalized to `≥ 1` / `≤ −1`.
pub fn prefix_feasible(l: &ExactMatrix, tau: &[Sign]) -> bool {
    let r = l.nrows();
    if tau.iter().all(|s| *s == Sign::Zero) {
        return true;
    }
    let mut lp = LinearProgram::new(r);
    for (i, s) in tau.iter().enumerate() {
        let col = l.column(i);
        match s {
            Sign::Pos => lp.add(col, Relation::Ge, Rational::one()),
            Sign::Neg => lp.add(col, Relation::Le, -Rational::one()),
            Sign::Zero => lp.add(col, Relation::Eq, Rational::zero()),
        }
    }
    lp.is_feasible()
}

/// Whether some `v` in the row space of `l` has `sign(v) = tau` exactly.
pub fn sign_orthant_feasible(l: &ExactMatrix, tau: &SignPattern) -> Result<bool> {
    if tau.len() != l.ncols() {
        return Err(Error::Dimension(format!("pattern of length {} for {} columns", tau.len(), l.ncols())));
    }
    Ok(prefix_feasible(l, &tau.0))
}

const SIGNS: [Sign; 3] = [Sign::Neg, Sign::Zero, Sign::Pos];

fn extend(l: &ExactMatrix, prefix: &mut Vec<Sign>, out: &mut Vec<SignPattern>) {
    if prefix.len() == l.ncols() {
        out.push(SignPattern(prefix.clone()));
        return;
    }
    for s in SIGNS {
        prefix.push(s);
        if prefix_feasible(l, prefix) {
            extend(l, prefix, out);
        }
        prefix.pop();
    }
}

/// All sign patterns realized by the row space of `l` (the zero pattern
/// included), by depth-first search that prunes infeasible prefixes. The
/// result is sorted by pattern.
pub fn feasible_sign_patterns(l: &ExactMatrix, strategy: Strategy) -> Vec<SignPattern> {
    let n = l.ncols();
    let split = n.min(2);
    let mut seeds = Vec::new();
    let mut stack = vec![Vec::new()];
    while let Some(p) = stack.pop() {
        if p.len() == split {
            seeds.push(p);
            continue;
        }
        for s in SIGNS {
            let mut q = p.clone();
            q.push(s);
            if prefix_feasible(l, &q) {
                stack.push(q);
            }
        }
    }
    let mut out: Vec<SignPattern> = par::map(strategy, &seeds, |seed| {
        let mut acc = Vec::new();
        extend(l, &mut seed.clone(), &mut acc);
        acc
    })
    .into_iter()
    .flatten()
    .collect();
    out.sort();
    out
}

/// Same as [`feasible_sign_patterns`] but tests every one of the `3^n`
/// patterns independently. Kept as a cross-check.
pub fn feasible_sign_patterns_exhaustive(l: &ExactMatrix, strategy: Strategy) -> Vec<SignPattern> {
    let n = l.ncols();
    let mut out = par::filter_map_range(strategy, 0..3usize.pow(n as u32), |i| {
        let p = SignPattern::from_index(i, n);
        prefix_feasible(l, &p.0).then_some(p)
    });
    out.sort();
    out
}

/// Sign vectors of the row space of `l` (the zero vector included), sorted.
///
/// For every `(c−1)`-subset `S` of independent columns the vector
/// `j ↦ det[L_S | L_j]` lies in the row space and has minimal support; every
/// sign vector is a composition of such cocircuit signs, so closing them
/// under composition gives all of them with no linear programming.
pub fn covectors(l: &ExactMatrix) -> Result<Vec<SignPattern>> {
    require_full_row_rank(l)?;
    let (c, n) = (l.nrows(), l.ncols());
    let mut cocircuits: BTreeSet<Vec<Sign>> = BTreeSet::new();
    for s in (0..n).combinations(c - 1) {
        let v: Vec<Sign> = (0..n)
            .map(|j| {
                if s.contains(&j) {
                    return Sign::Zero;
                }
                let mut cols = s.clone();
                cols.push(j);
                Sign::of(&l.minor(&cols))
            })
            .collect();
        if v.iter().any(|x| *x != Sign::Zero) {
            cocircuits.insert(v.iter().map(|x| x.flip()).collect());
            cocircuits.insert(v);
        }
    }
    let mut all: BTreeSet<Vec<Sign>> = BTreeSet::from([vec![Sign::Zero; n]]);
    let mut frontier: Vec<Vec<Sign>> = all.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for y in &cocircuits {
            let z: Vec<Sign> = x.iter().zip(y).map(|(&a, &b)| if a == Sign::Zero { b } else { a }).collect();
            if all.insert(z.clone()) {
                frontier.push(z);
            }
        }
    }
    Ok(all.into_iter().map(SignPattern).collect())
}

/// Extremes of `var` and `varbar` over the nonzero vectors of a subspace.
/// All fields are `None` for the zero subspace.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct VariationSummary {
    pub max_var: Option<usize>,
    pub max_varbar: Option<usize>,
    pub min_var: Option<usize>,
    pub min_varbar: Option<usize>,
}

pub fn variation_summary(l: &ExactMatrix) -> Result<VariationSummary> {
    require_full_row_rank(l)?;
    let pats: Vec<SignPattern> = covectors(l)?.into_iter().filter(|p| !p.is_zero()).collect();
    let vars = || pats.iter().map(var);
    let varbars = || pats.iter().map(varbar);
    Ok(VariationSummary {
        max_var: vars().max(),
        max_varbar: varbars().max(),
        min_var: vars().min(),
        min_varbar: varbars().min(),
    })
}

fn nonzero_subspace(l: &ExactMatrix) -> Result<()> {
    if l.nrows() == 0 {
        return Err(Error::Empty("subspace spanned by zero rows"));
    }
    Ok(())
}

/// `max var(v)` over nonzero `v` in the row space.
pub fn max_var_over_subspace(l: &ExactMatrix) -> Result<usize> {
    nonzero_subspace(l)?;
    Ok(variation_summary(l)?.max_var.expect("nonzero subspace"))
}

/// `max varbar(v)` over nonzero `v` in the row space.
pub fn max_varbar_over_subspace(l: &ExactMatrix) -> Result<usize> {
    nonzero_subspace(l)?;
    Ok(variation_summary(l)?.max_varbar.expect("nonzero subspace"))
}
