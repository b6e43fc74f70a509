use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::lp::{LinearProgram, LpOutcome, Relation};
use crate::exactlin::ExactMatrix;
use crate::par::{self, Strategy};
use crate::rational::{int, Rational};
use crate::stability::poly::{LatticePointSet, LatticePolynomial, ValuedPolynomial};
use crate::stability::polytope::{hull_contains, is_generalized_permutohedron};

/// Exchange axiom: for `x, y ∈ S` and `x_i > y_i` there is `j` with
/// `x_j < y_j` and `x − e_i + e_j ∈ S`.
pub fn is_m_convex_set(s: &LatticePointSet) -> Result<bool> {
    if s.degree().is_none() {
        return Err(Error::NotHomogeneous);
    }
    Ok(exchange_failure(s).is_none())
}

/// A violating `(x, y, i)` (0-indexed `i`) for the exchange axiom.
pub fn exchange_failure(s: &LatticePointSet) -> Option<(Vec<i64>, Vec<i64>, usize)> {
    for x in &s.points {
        for y in &s.points {
            for i in 0..s.n {
                if x[i] <= y[i] {
                    continue;
                }
                let ok = (0..s.n).filter(|&j| x[j] < y[j]).any(|j| {
                    let mut z = x.clone();
                    z[i] -= 1;
                    z[j] += 1;
                    s.contains(&z)
                });
                if !ok {
                    return Some((x.clone(), y.clone(), i));
                }
            }
        }
    }
    None
}

/// Definition-level check: the hull has all edges along `e_i − e_j` and
/// contains no lattice point outside `s`.
pub fn is_m_convex_set_by_hull(s: &LatticePointSet) -> Result<bool> {
    let Some(d) = s.degree() else {
        return Err(Error::NotHomogeneous);
    };
    if !is_generalized_permutohedron(s) {
        return Ok(false);
    }
    let lo: Vec<i64> = (0..s.n).map(|i| s.points.iter().map(|p| p[i]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..s.n).map(|i| s.points.iter().map(|p| p[i]).max().unwrap()).collect();
    let boxed = (0..s.n).map(|i| lo[i]..=hi[i]).multi_cartesian_product();
    for p in boxed {
        if p.iter().sum::<i64>() == d && !s.contains(&p) && hull_contains(&s.points, &p) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn dot(w: &[Rational], e: &[u32]) -> Rational {
    w.iter().zip(e).fold(Rational::zero(), |acc, (wi, &k)| acc + wi * int(k as i64))
}

/// Terms minimizing `val + w · exponent`, with their leading coefficients.
pub fn tinit(f: &ValuedPolynomial, w: &[Rational]) -> Result<LatticePolynomial> {
    if w.len() != f.n() {
        return Err(Error::Dimension(format!("weight of length {} for {} variables", w.len(), f.n())));
    }
    let score = |e: &[u32], v: &Rational| v + dot(w, e);
    let best = f.terms().iter().map(|(e, c)| score(e, &c.val)).min().expect("nonempty");
    LatticePolynomial::new(
        f.n(),
        f.terms().iter().filter(|(e, c)| score(e, &c.val) == best).map(|(e, c)| (e.clone(), c.lead.clone())),
    )
}

/// `w` lies on the tropical hypersurface of `f`: the minimum is attained at
/// least twice.
pub fn in_tropical_hypersurface(f: &ValuedPolynomial, w: &[Rational]) -> Result<bool> {
    Ok(tinit(f, w)?.terms().len() >= 2)
}

/// `w` lies on every tropical hypersurface of the given generators.
pub fn in_tropical_prevariety(generators: &[ValuedPolynomial], w: &[Rational]) -> Result<bool> {
    for g in generators {
        if !in_tropical_hypersurface(g, w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest lower face of the lifted point set containing `seed` (indices),
/// or `None` when the seed points do not lie on a common lower face.
///
/// Works in homogenized variables `(w, t, μ)` with `μ ≥ 1`: equality
/// `μ·h_q + w·p_q = t` on the seed, `≥` elsewhere, and maximizes slack
/// indicators `s_q ≤ μ·h_q + w·p_q − t`, `0 ≤ s_q ≤ 1`. The cone structure
/// lets every point that can be strictly above the face reach `s_q = 1`, so
/// the face is exactly the seed plus the points with `s_q = 0`.
fn lower_face_closure(points: &[Vec<i64>], heights: &[Rational], seed: &[usize]) -> Option<Vec<usize>> {
    let n = points[0].len();
    let k = points.len();
    let others: Vec<usize> = (0..k).filter(|q| !seed.contains(q)).collect();
    // Variables: w (n), t, μ, then one slack per non-seed point.
    let nv = n + 2 + others.len();
    let (t, mu) = (n, n + 1);
    let mut lp = LinearProgram::new(nv);
    let row = |q: usize| {
        let mut r = vec![Rational::zero(); nv];
        for i in 0..n {
            r[i] = int(points[q][i]);
        }
        r[t] = -Rational::one();
        r[mu] = heights[q].clone();
        r
    };
    for &q in seed {
        lp.add(row(q), Relation::Eq, Rational::zero());
    }
    let mut unit = vec![Rational::zero(); nv];
    unit[mu] = Rational::one();
    lp.add(unit, Relation::Ge, Rational::one());
    let mut objective = vec![Rational::zero(); nv];
    for (k, &q) in others.iter().enumerate() {
        let s = n + 2 + k;
        let mut r = row(q);
        r[s] = -Rational::one();
        lp.add(r, Relation::Ge, Rational::zero());
        lp.set_nonnegative(s);
        let mut cap = vec![Rational::zero(); nv];
        cap[s] = Rational::one();
        lp.add(cap, Relation::Le, Rational::one());
        objective[s] = Rational::one();
    }
    lp.set_objective(objective);
    match lp.solve() {
        LpOutcome::Optimal { point, .. } => {
            let mut face: Vec<usize> = seed.to_vec();
            for (k, &q) in others.iter().enumerate() {
                if point[n + 2 + k].is_zero() {
                    face.push(q);
                }
            }
            face.sort();
            Some(face)
        }
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("slacks are capped"),
    }
}

fn affine_dimension(points: &[Vec<i64>]) -> usize {
    let base = &points[0];
    let rows: Vec<Vec<Rational>> =
        points[1..].iter().map(|p| p.iter().zip(base).map(|(a, b)| int(a - b)).collect()).collect();
    if rows.is_empty() {
        return 0;
    }
    ExactMatrix::from_rows(base.len(), rows).expect("shape").rank()
}

/// Point sets of every cell (of every dimension) of the regular subdivision
/// of the support induced by lifting each point to its valuation.
pub fn lower_cells(f: &ValuedPolynomial, strategy: Strategy) -> Vec<LatticePointSet> {
    let points = f.support();
    let heights: Vec<Rational> = f.terms().values().map(|c| c.val.clone()).collect();
    let dim = affine_dimension(&points);
    let seeds: Vec<Vec<usize>> =
        (1..=(dim + 1).min(points.len())).flat_map(|size| (0..points.len()).combinations(size)).collect();
    let faces: BTreeSet<Vec<usize>> =
        par::map(strategy, &seeds, |seed| lower_face_closure(&points, &heights, seed)).into_iter().flatten().collect();
    faces
        .into_iter()
        .map(|idx| LatticePointSet::new(f.n(), idx.iter().map(|&i| points[i].clone()).collect()).expect("nonempty"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MConvexFunctionVerdict {
    pub holds: bool,
    pub cells_checked: usize,
    /// Point set of a cell that fails the exchange axiom.
    pub failing_cell: Option<Vec<Vec<i64>>>,
}

/// Whether the valuations form an M-convex function on the support: every
/// cell of the induced regular subdivision must be an M-convex set.
pub fn is_m_convex_function(f: &ValuedPolynomial) -> Result<MConvexFunctionVerdict> {
    is_m_convex_function_with(f, Strategy::default())
}

pub fn is_m_convex_function_with(f: &ValuedPolynomial, strategy: Strategy) -> Result<MConvexFunctionVerdict> {
    let support = LatticePointSet::new(f.n(), f.support())?;
    if support.degree().is_none() {
        return Err(Error::NotHomogeneous);
    }
    let cells = lower_cells(f, strategy);
    let failing = cells.iter().find(|c| exchange_failure(c).is_some());
    Ok(MConvexFunctionVerdict {
        holds: failing.is_none(),
        cells_checked: cells.len(),
        failing_cell: failing.map(|c| c.points.clone()),
    })
}
