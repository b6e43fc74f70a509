use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::curves::speyer::SpeyerParam;
use crate::par::{self, Strategy};
use crate::rational::{ratio, ComplexRational, Rational};
use crate::signvar::{var, varbar};

/// Numerator bound for sampled real and imaginary parts.
pub const NUMERATOR_BOUND: i64 = 10;
/// Denominator bound for sampled real and imaginary parts.
pub const DENOMINATOR_BOUND: i64 = 5;

/// Random `p/q + (p'/q') i` with `|p|, |p'| ≤ 10` and `1 ≤ q, q' ≤ 5`.
pub fn random_complex<R: Rng>(rng: &mut R) -> ComplexRational {
    let mut part =
        || ratio(rng.random_range(-NUMERATOR_BOUND..=NUMERATOR_BOUND), rng.random_range(1..=DENOMINATOR_BOUND));
    let re = part();
    ComplexRational::new(re, part())
}

/// Generator for trial `trial` under `seed`, independent of scheduling.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Outcome of sampling `varbar(Im x) ≥ n − 2` on a parametrized curve.
/// A sampled check, not a proof.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub trials: u64,
    pub seed: u64,
    pub bound: usize,
    pub min_varbar_observed: Option<usize>,
    pub violations: u64,
    pub first_violation: Option<u64>,
    /// Largest `var` of the imaginary parts with all signs dropped.
    pub max_unsigned_var: Option<usize>,
}

struct Trial {
    varbar: usize,
    unsigned_var: usize,
}

pub fn sample_varbar_check(p: &SpeyerParam, trials: u64, seed: u64) -> SampleReport {
    sample_varbar_check_with(p, trials, seed, Strategy::default())
}

pub fn sample_varbar_check_with(p: &SpeyerParam, trials: u64, seed: u64, strategy: Strategy) -> SampleReport {
    let unsigned = p.unsigned();
    let results = par::map_range(strategy, 0..trials as usize, |t| {
        let mut rng = trial_rng(seed, t as u64);
        let u = random_complex(&mut rng);
        let v = random_complex(&mut rng);
        let im = |x: Vec<ComplexRational>| x.into_iter().map(|z| z.im).collect::<Vec<Rational>>();
        Trial { varbar: varbar(&im(p.evaluate(&u, &v))), unsigned_var: var(&im(unsigned.evaluate(&u, &v))) }
    });
    let bound = p.n.saturating_sub(2);
    let failing: Vec<u64> = (0..results.len()).filter(|&t| results[t].varbar < bound).map(|t| t as u64).collect();
    SampleReport {
        trials,
        seed,
        bound,
        min_varbar_observed: results.iter().map(|r| r.varbar).min(),
        violations: failing.len() as u64,
        first_violation: failing.first().copied(),
        max_unsigned_var: results.iter().map(|r| r.unsigned_var).max(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::speyer::{piece_from_blocks, speyer_parametrization};

    #[test]
    fn example_has_no_violations() {
        let piece = piece_from_blocks(6, &[(2, 3), (5, 4), (3, 3), (6, 2)]).unwrap();
        let p = speyer_parametrization(&piece).unwrap();
        let r = sample_varbar_check(&p, 300, 7);
        assert_eq!(r.bound, 4);
        assert_eq!(r.violations, 0);
        assert!(r.max_unsigned_var.unwrap() <= 1);
        let seq = sample_varbar_check_with(&p, 300, 7, Strategy::Sequential);
        assert_eq!(seq, r);
    }

    #[test]
    fn flipped_sign_is_caught() {
        let piece = piece_from_blocks(6, &[(2, 3), (5, 4), (3, 3), (6, 2)]).unwrap();
        let mut p = speyer_parametrization(&piece).unwrap();
        p.coordinates[1].sign = 1;
        assert!(sample_varbar_check(&p, 300, 7).violations > 0);
    }
}
