use itertools::Itertools;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::matrix::ExactMatrix;
use crate::rational::Rational;

/// Maximal minors of a full-rank `c × n` matrix, indexed by the `c`-subsets
/// of `0..n` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlueckerVector {
    pub c: usize,
    pub n: usize,
    pub coordinates: Vec<(Vec<usize>, Rational)>,
}

impl PlueckerVector {
    pub fn get(&self, subset: &[usize]) -> Option<&Rational> {
        self.coordinates.iter().find(|(s, _)| s == subset).map(|(_, v)| v)
    }

    pub fn values(&self) -> impl Iterator<Item = &Rational> {
        self.coordinates.iter().map(|(_, v)| v)
    }

    /// Two subsets whose coordinates have opposite strict signs, if any.
    pub fn opposite_signs(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let pos = self.coordinates.iter().find(|(_, v)| v.is_positive())?;
        let neg = self.coordinates.iter().find(|(_, v)| v.is_negative())?;
        Some((pos.0.clone(), neg.0.clone()))
    }

    pub fn class(&self) -> GrassmannClass {
        if self.opposite_signs().is_some() {
            GrassmannClass::Mixed
        } else if self.values().any(|v| v.is_zero()) {
            GrassmannClass::Nonnegative
        } else {
            GrassmannClass::Positive
        }
    }
}

/// Sign class of a subspace, up to global sign of its Plücker vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GrassmannClass {
    Positive,
    Nonnegative,
    Mixed,
}

impl GrassmannClass {
    pub fn is_nonnegative(self) -> bool {
        self != GrassmannClass::Mixed
    }
}

pub(crate) fn require_full_row_rank(m: &ExactMatrix) -> Result<()> {
    let r = m.rank();
    if r != m.nrows() {
        return Err(Error::RankDeficient { rank: r, expected: m.nrows() });
    }
    Ok(())
}

pub fn maximal_minors(m: &ExactMatrix) -> Result<PlueckerVector> {
    require_full_row_rank(m)?;
    let (c, n) = (m.nrows(), m.ncols());
    let coordinates = (0..n)
        .combinations(c)
        .map(|s| {
            let d = m.minor(&s);
            (s, d)
        })
        .collect();
    Ok(PlueckerVector { c, n, coordinates })
}

pub fn grassmannian_class(m: &ExactMatrix) -> Result<GrassmannClass> {
    Ok(maximal_minors(m)?.class())
}

/// Primitive integer basis of the orthogonal complement of the row space.
pub fn orthogonal_complement(m: &ExactMatrix) -> Result<ExactMatrix> {
    require_full_row_rank(m)?;
    Ok(m.kernel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn minors_and_classes() {
        let m = ExactMatrix::from_ints(&[[1, 1, 1], [0, 1, 2]]);
        let p = maximal_minors(&m).unwrap();
        assert_eq!(p.values().cloned().collect::<Vec<_>>(), vec![int(1), int(2), int(1)]);
        assert_eq!(p.get(&[0, 2]), Some(&int(2)));
        let pos = ExactMatrix::from_ints(&[[1, 0, -1], [0, 1, 2]]);
        assert_eq!(grassmannian_class(&pos).unwrap(), GrassmannClass::Positive);
        let nn = ExactMatrix::from_ints(&[[1, 0, 0], [0, 1, 0]]);
        assert_eq!(grassmannian_class(&nn).unwrap(), GrassmannClass::Nonnegative);
        let mixed = ExactMatrix::from_ints(&[[1, 0, 1], [0, 1, 2]]);
        assert_eq!(grassmannian_class(&mixed).unwrap(), GrassmannClass::Mixed);
        let neg = ExactMatrix::from_ints(&[[0, 1], [1, 0]]);
        assert_eq!(maximal_minors(&neg).unwrap().get(&[0, 1]), Some(&int(-1)));
        assert_eq!(grassmannian_class(&neg).unwrap(), GrassmannClass::Positive);
        assert!(maximal_minors(&ExactMatrix::from_ints(&[[1, 2], [2, 4]])).is_err());
    }
}
