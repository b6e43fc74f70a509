use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::rational::{ratio, serde_rational_vec, Rational};
use crate::stability::poly::LatticePolynomial;
use crate::stability::univariate::UniPoly;

/// `f(t·v + w)` as a polynomial in `t`; `f` must be real.
pub fn restrict_to_line(f: &LatticePolynomial, v: &[Rational], w: &[Rational]) -> Result<UniPoly> {
    if !f.is_real() {
        return Err(Error::NotReal);
    }
    if v.len() != f.n() || w.len() != f.n() {
        return Err(Error::Dimension(format!("line in dimension {} for {} variables", v.len(), f.n())));
    }
    let lines: Vec<UniPoly> = v.iter().zip(w).map(|(a, b)| UniPoly::linear(a.clone(), b.clone())).collect();
    Ok(f.terms().iter().fold(UniPoly::default(), |acc, (e, c)| {
        let term = e.iter().zip(&lines).fold(UniPoly::constant(c.re.clone()), |m, (&k, l)| m.mul(&l.pow(k)));
        acc.add(&term)
    }))
}

/// Whether `t ↦ f(t·v + w)` has only real roots, for `v > 0`.
///
/// A restriction that vanishes identically counts as *not* real-rooted:
/// then `f` vanishes at `i·v + w`, a point with positive imaginary parts,
/// which no stable polynomial allows. Nonzero constants are real-rooted.
pub fn real_rooted_on_line(f: &LatticePolynomial, v: &[Rational], w: &[Rational]) -> Result<bool> {
    if v.iter().any(|x| !x.is_positive()) {
        return Err(Error::OutOfRange("direction must be strictly positive".into()));
    }
    let g = restrict_to_line(f, v, w)?;
    Ok(match g.degree() {
        None => false,
        Some(0) => true,
        Some(_) => {
            let h = g.squarefree_part();
            h.count_real_roots() == h.degree().unwrap_or(0)
        }
    })
}

/// Bound `D` on numerators and denominators of sampled lines.
pub const SAMPLE_BOUND: i64 = 10;

/// The `trial`-th sampled line. Half the trials are fine: `v_i = p/q` with
/// `p, q ∈ [1, D]` and `w_i = p/q` with `p ∈ [−D, D]`, `q ∈ [1, D]`. The other
/// half are coarse, `v_i ∈ {1, 2}` and `w_i ∈ {−1, 0, 1}`, so coordinates tie
/// often; a polynomial like `x_1² − x_2²` fails only on lines where it
/// vanishes identically, and those need `v_1 = v_2`, `w_1 = w_2`. Each trial
/// has its own stream, so samples do not depend on how trials are scheduled.
pub fn sample_line(n: usize, seed: u64, trial: u64) -> (Vec<Rational>, Vec<Rational>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    if rng.random_bool(0.5) {
        let v = (0..n).map(|_| ratio(rng.random_range(1..=2), 1)).collect();
        let w = (0..n).map(|_| ratio(rng.random_range(-1..=1), 1)).collect();
        return (v, w);
    }
    let d = SAMPLE_BOUND;
    let v = (0..n).map(|_| ratio(rng.random_range(1..=d), rng.random_range(1..=d))).collect();
    let w = (0..n).map(|_| ratio(rng.random_range(-d..=d), rng.random_range(1..=d))).collect();
    (v, w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum FalsifyOutcome {
    /// A positive line meeting the hypersurface at a nonreal point.
    Counterexample {
        trial: u64,
        #[serde(with = "serde_rational_vec")]
        v: Vec<Rational>,
        #[serde(with = "serde_rational_vec")]
        w: Vec<Rational>,
    },
    /// No sampled line failed. This is not a proof of stability.
    NotFalsified { trials: u64 },
}

impl FalsifyOutcome {
    pub fn is_falsified(&self) -> bool {
        matches!(self, FalsifyOutcome::Counterexample { .. })
    }
}

/// Samples positive lines and reports the first (lowest trial index) on which
/// `f` is not real-rooted.
pub fn falsify_stability(f: &LatticePolynomial, trials: u64, seed: u64) -> Result<FalsifyOutcome> {
    falsify_stability_with(f, trials, seed, Strategy::default())
}

pub fn falsify_stability_with(
    f: &LatticePolynomial,
    trials: u64,
    seed: u64,
    strategy: Strategy,
) -> Result<FalsifyOutcome> {
    if !f.is_real() {
        return Err(Error::NotReal);
    }
    if f.is_zero() {
        return Err(Error::Empty("polynomial"));
    }
    let hit = par::find_first_range(strategy, 0..trials as usize, |t| {
        let (v, w) = sample_line(f.n(), seed, t as u64);
        let ok = real_rooted_on_line(f, &v, &w).expect("validated input");
        (!ok).then_some((t as u64, v, w))
    });
    Ok(match hit {
        Some((trial, v, w)) => FalsifyOutcome::Counterexample { trial, v, w },
        None => FalsifyOutcome::NotFalsified { trials },
    })
}
