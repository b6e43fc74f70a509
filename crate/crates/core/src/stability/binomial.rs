use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::ComplexRational;

/// Shape of `{α, β}` after dividing out the common monomial factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum BinomialCase {
    /// `a + b·x_i` (0-indexed `i`).
    ConstantAndVariable {
        i: usize,
    },
    /// `a·x_i + b·x_j`, `i ≠ j`.
    TwoVariables {
        i: usize,
        j: usize,
    },
    /// `a + b·x_i·x_j`, possibly `i = j`.
    ConstantAndProduct {
        i: usize,
        j: usize,
    },
    Other,
}

/// Condition on the coefficients under which the binomial is stable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilityCondition {
    /// The root `−a/b` of `a + b·x_i` is not in the open upper half-plane;
    /// automatic for real coefficients.
    RootNotInUpperHalfPlane,
    /// `a/b` is a positive real.
    RatioPositive,
    /// `a/b` is a negative real.
    RatioNegative,
    Never,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialVerdict {
    pub case: BinomialCase,
    pub condition: StabilityCondition,
    pub stable: bool,
}

/// Stability of `a·x^α + b·x^β`. The coefficient `a` is the one attached to
/// the exponent that becomes `0` (or `e_i`) after reduction.
pub fn classify_binomial(
    a: &ComplexRational,
    alpha: &[u32],
    b: &ComplexRational,
    beta: &[u32],
) -> Result<BinomialVerdict> {
    if alpha.len() != beta.len() {
        return Err(Error::Dimension("exponents of different lengths".into()));
    }
    if alpha == beta {
        return Err(Error::OutOfRange("the two exponents must differ".into()));
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::OutOfRange("coefficients must be nonzero".into()));
    }
    let g: Vec<u32> = alpha.iter().zip(beta).map(|(x, y)| *x.min(y)).collect();
    let ra: Vec<u32> = alpha.iter().zip(&g).map(|(x, m)| x - m).collect();
    let rb: Vec<u32> = beta.iter().zip(&g).map(|(x, m)| x - m).collect();
    let deg = |e: &[u32]| e.iter().sum::<u32>();
    let support = |e: &[u32]| -> Vec<usize> {
        e.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize)).collect()
    };
    // Orient so that `lo` is the reduced exponent of smaller degree.
    let (lo, lo_c, hi, hi_c) = if deg(&ra) <= deg(&rb) { (&ra, a, &rb, b) } else { (&rb, b, &ra, a) };
    let ratio = lo_c.div(hi_c).expect("nonzero");
    let (case, condition, stable) = match (deg(lo), deg(hi)) {
        (0, 1) => {
            let root = -ratio;
            let stable = !root.im.is_positive();
            (
                BinomialCase::ConstantAndVariable { i: support(hi)[0] },
                StabilityCondition::RootNotInUpperHalfPlane,
                stable,
            )
        }
        (1, 1) => {
            let (i, j) = (support(lo)[0], support(hi)[0]);
            let stable = ratio.is_real() && ratio.re.is_positive();
            (BinomialCase::TwoVariables { i: i.min(j), j: i.max(j) }, StabilityCondition::RatioPositive, stable)
        }
        (0, 2) => {
            let s = support(hi);
            let stable = ratio.is_real() && ratio.re.is_negative();
            (BinomialCase::ConstantAndProduct { i: s[0], j: s[1] }, StabilityCondition::RatioNegative, stable)
        }
        _ => (BinomialCase::Other, StabilityCondition::Never, false),
    };
    Ok(BinomialVerdict { case, condition, stable })
}
