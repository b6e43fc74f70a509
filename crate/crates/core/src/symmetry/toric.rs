use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::curves::{random_complex, trial_rng};
use crate::error::{Error, Result};
use crate::exactlin::{matroid_of_columns, ExactMatrix};
use crate::matroids::{is_positroid, Crossing, CyclicPartition, Matroid, Subset};
use crate::par::{self, Strategy};
use crate::rational::{int, ComplexRational, Rational};
use crate::signvar::varbar;

/// Why a toric variety is not positively hyperbolic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ToricObstruction {
    /// After row reduction this column (1-indexed) is not `0` or `±e_i`.
    Column { column: usize },
    /// Two row supports cross.
    Crossing { crossing: Crossing },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ToricVerdict {
    /// `t ↦ (λ_j t^{a_j})_j` is positively hyperbolic, with `a_j` the columns
    /// of `reduced`.
    Yes {
        lambda: Vec<i8>,
        reduced: Vec<Vec<i64>>,
        blocks: Vec<Vec<usize>>,
    },
    No {
        reason: ToricObstruction,
    },
}

impl ToricVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, ToricVerdict::Yes { .. })
    }
}

/// Integer `d × n` matrix of exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    pub rows: Vec<Vec<i64>>,
    pub n: usize,
}

impl IntegerMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.first().map(|r| r.len()).ok_or(Error::Empty("matrix"))?;
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(IntegerMatrix { rows, n })
    }

    pub fn d(&self) -> usize {
        self.rows.len()
    }

    pub fn to_exact(&self) -> ExactMatrix {
        ExactMatrix::from_ints(&self.rows)
    }
}

/// Row reduces `A`, checks the columns are `0` or `±e_i` and the row
/// supports are non-crossing, and picks signs `λ`.
pub fn toric_positively_hyperbolic(a: &IntegerMatrix) -> Result<ToricVerdict> {
    let m = a.to_exact();
    let (d, n) = (a.d(), a.n);
    let (r, pivots) = m.rref();
    if pivots.len() < d {
        return Err(Error::RankDeficient { rank: pivots.len(), expected: d });
    }
    let mut owner: Vec<Option<(usize, i8)>> = vec![None; n];
    let mut reduced = vec![vec![0i64; n]; d];
    for j in 0..n {
        let nz: Vec<usize> = (0..d).filter(|&i| !r.get(i, j).is_zero()).collect();
        match nz.as_slice() {
            [] => {}
            [i] if r.get(*i, j).abs().is_one() => {
                let s: i8 = if r.get(*i, j).is_positive() { 1 } else { -1 };
                owner[j] = Some((*i, s));
                reduced[*i][j] = s as i64;
            }
            _ => return Ok(ToricVerdict::No { reason: ToricObstruction::Column { column: j + 1 } }),
        }
    }
    let blocks: Vec<Vec<usize>> =
        (0..d).map(|i| (0..n).filter(|&j| owner[j].map(|o| o.0) == Some(i)).collect()).collect();
    let partition =
        CyclicPartition::new(n, blocks.iter().map(|b| Subset::from_indices(b)).collect::<Result<Vec<_>>>()?)?;
    if let Some(crossing) = partition.crossing() {
        return Ok(ToricVerdict::No { reason: ToricObstruction::Crossing { crossing } });
    }
    let lambda = choose_lambda(&owner, &blocks, d);
    let lambda = if signs_verified(&owner, &lambda, d) {
        lambda
    } else {
        search_lambda(&owner, d)
            .ok_or_else(|| Error::Inconsistent("no sign vector makes the toric variety positively hyperbolic".into()))?
    };
    Ok(ToricVerdict::Yes {
        lambda,
        reduced,
        blocks: blocks.iter().map(|b| b.iter().map(|j| j + 1).collect()).collect(),
    })
}

/// Within each row block, for consecutive members `j < j'` with `e`
/// positions and `b` whole blocks strictly between them, the imaginary-part
/// sign `a = λ·ε` flips iff `e − b` is even. Each nested block behaves like
/// one position whose sign is free.
fn choose_lambda(owner: &[Option<(usize, i8)>], blocks: &[Vec<usize>], d: usize) -> Vec<i8> {
    let n = owner.len();
    let mut a = vec![1i8; n];
    for block in blocks {
        for w in block.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let e = hi - lo - 1;
            let b = (0..d).filter(|&i| blocks[i].first().is_some_and(|&f| f > lo && f < hi)).count();
            a[hi] = if (e - b) % 2 == 0 { -a[lo] } else { a[lo] };
        }
    }
    (0..n).map(|j| owner[j].map_or(1, |(_, eps)| a[j] * eps)).collect()
}

/// Exact check over every sign choice for `Im t_i` (including `0`): the
/// imaginary parts of `λ_j t_i^{±1}` have sign `λ_j ε_j sign(Im t_i)`, and
/// zero columns are real.
fn signs_verified(owner: &[Option<(usize, i8)>], lambda: &[i8], d: usize) -> bool {
    let n = owner.len();
    let codim = n - d;
    let total = 3usize.pow(d as u32);
    (0..total).all(|mut idx| {
        let sigma: Vec<i8> = (0..d)
            .map(|_| {
                let s = (idx % 3) as i8 - 1;
                idx /= 3;
                s
            })
            .collect();
        let v: Vec<Rational> =
            (0..n).map(|j| owner[j].map_or(int(0), |(i, eps)| int((lambda[j] * eps * sigma[i]) as i64))).collect();
        varbar(&v) >= codim
    })
}

fn search_lambda(owner: &[Option<(usize, i8)>], d: usize) -> Option<Vec<i8>> {
    let n = owner.len();
    (0..1usize << n)
        .map(|mask| (0..n).map(|j| if mask >> j & 1 == 1 { -1 } else { 1 }).collect::<Vec<i8>>())
        .find(|l| signs_verified(owner, l, d))
}

/// Result of sampling `varbar(Im x) ≥ n − d` along `t ↦ (λ_j t^{a_j})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToricSampleReport {
    pub trials: u64,
    pub seed: u64,
    pub bound: usize,
    pub min_varbar_observed: Option<usize>,
    pub violations: u64,
}

/// Evaluates `λ_j Π_i t_i^{a_ij}` exactly.
pub fn monomial_point(reduced: &[Vec<i64>], lambda: &[i8], t: &[ComplexRational]) -> Option<Vec<ComplexRational>> {
    let n = lambda.len();
    (0..n)
        .map(|j| {
            let mut x = ComplexRational::real(int(lambda[j] as i64));
            for (i, row) in reduced.iter().enumerate() {
                let e = row[j];
                let f = if e >= 0 { t[i].pow(e as u32) } else { t[i].inv()?.pow((-e) as u32) };
                x = &x * &f;
            }
            Some(x)
        })
        .collect()
}

pub fn sample_toric_varbar(
    reduced: &[Vec<i64>],
    lambda: &[i8],
    trials: u64,
    seed: u64,
    strategy: Strategy,
) -> ToricSampleReport {
    let d = reduced.len();
    let n = lambda.len();
    let values: Vec<usize> = par::filter_map_range(strategy, 0..trials as usize, |trial| {
        let mut rng = trial_rng(seed, trial as u64);
        let t: Vec<ComplexRational> = (0..d).map(|_| random_complex(&mut rng)).collect();
        let x = monomial_point(reduced, lambda, &t)?;
        Some(varbar(&x.into_iter().map(|z| z.im).collect::<Vec<_>>()))
    });
    let bound = n - d;
    ToricSampleReport {
        trials,
        seed,
        bound,
        min_varbar_observed: values.iter().copied().min(),
        violations: values.iter().filter(|&&v| v < bound).count() as u64,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToricMatroidReport {
    pub matroid: Matroid,
    pub positively_hyperbolic: bool,
    pub is_positroid: bool,
}

/// Column matroid of `A`, which is the algebraic matroid of the toric
/// variety. When the variety is positively hyperbolic it must be a
/// positroid; a failure here is reported as an error.
pub fn toric_algebraic_matroid(a: &IntegerMatrix) -> Result<ToricMatroidReport> {
    let matroid = matroid_of_columns(&a.to_exact())?;
    let positively_hyperbolic = toric_positively_hyperbolic(a)?.is_yes();
    let positroid = is_positroid(&matroid).is_positroid;
    if positively_hyperbolic && !positroid {
        return Err(Error::Inconsistent("positively hyperbolic toric variety with a non-positroid matroid".into()));
    }
    Ok(ToricMatroidReport { matroid, positively_hyperbolic, is_positroid: positroid })
}

/// `λ_j · Π t_i^{a_ij}` written with `t`, `t1`, `t2`, … for display.
pub fn describe_parametrization(reduced: &[Vec<i64>], lambda: &[i8]) -> Vec<String> {
    let d = reduced.len();
    (0..lambda.len())
        .map(|j| {
            let mut parts = Vec::new();
            for (i, row) in reduced.iter().enumerate() {
                let var = if d == 1 { "t".to_string() } else { format!("t{}", i + 1) };
                match row[j] {
                    0 => {}
                    1 => parts.push(var),
                    e => parts.push(format!("{var}^{e}")),
                }
            }
            let body = if parts.is_empty() { "1".to_string() } else { parts.join("*") };
            if lambda[j] < 0 {
                format!("-{body}")
            } else {
                body
            }
        })
        .collect()
}
