use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroids::matroid::Matroid;
use crate::matroids::subset::{Subset, MAX_ELEMENTS};

/// Disjoint nonempty blocks of elements of `{0, …, n−1}`, read in cyclic
/// order. The blocks need not cover the ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicPartition {
    pub n: usize,
    pub blocks: Vec<Subset>,
}

impl CyclicPartition {
    pub fn new(n: usize, blocks: Vec<Subset>) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge(n, MAX_ELEMENTS));
        }
        let full = Subset::full(n);
        let mut seen = Subset::EMPTY;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidSubset("empty block".into()));
            }
            if !b.is_subset_of(full) {
                return Err(Error::InvalidSubset(format!("block {b} outside [{n}]")));
            }
            if !b.intersection(seen).is_empty() {
                return Err(Error::InvalidSubset(format!("block {b} overlaps another block")));
            }
            seen = seen.union(*b);
        }
        Ok(CyclicPartition { n, blocks })
    }

    pub fn from_one_indexed(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let blocks = blocks.iter().map(|b| Subset::from_one_indexed(b, n)).collect::<Result<Vec<_>>>()?;
        Self::new(n, blocks)
    }

    /// Two blocks and four elements `a < b < c < d` with `a, c` in the first
    /// and `b, d` in the second, if any.
    pub fn crossing(&self) -> Option<Crossing> {
        for (i, s) in self.blocks.iter().enumerate() {
            for (j, t) in self.blocks.iter().enumerate() {
                if i == j {
                    continue;
                }
                for a in s.iter() {
                    for b in t.iter().filter(|&b| b > a) {
                        for c in s.iter().filter(|&c| c > b) {
                            if let Some(d) = t.iter().find(|&d| d > c) {
                                return Some(Crossing {
                                    blocks: (s.one_indexed(), t.one_indexed()),
                                    witness: [a + 1, b + 1, c + 1, d + 1],
                                });
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Literal check over quadruples.
    pub fn is_noncrossing(&self) -> bool {
        self.crossing().is_none()
    }

    /// Linear scan with a stack of open blocks. Agrees with
    /// [`CyclicPartition::is_noncrossing`].
    pub fn is_noncrossing_scan(&self) -> bool {
        let mut owner = vec![None; self.n];
        for (k, b) in self.blocks.iter().enumerate() {
            for e in b.iter() {
                owner[e] = Some(k);
            }
        }
        let mut stack: Vec<usize> = Vec::new();
        for (e, o) in owner.iter().enumerate() {
            let Some(k) = *o else { continue };
            let block = self.blocks[k];
            let first = block.min() == Some(e);
            let last = block.max() == Some(e);
            if !first && stack.last() != Some(&k) {
                return false;
            }
            if first && !last {
                stack.push(k);
            } else if !first && last {
                stack.pop();
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    /// The two crossing blocks, 1-indexed.
    pub blocks: (Vec<usize>, Vec<usize>),
    /// `a < b < c < d`, 1-indexed, alternating between the blocks.
    pub witness: [usize; 4],
}

pub fn is_noncrossing_partition(p: &CyclicPartition) -> bool {
    p.is_noncrossing()
}

/// Connected components as a cyclic partition of the ground set.
pub fn component_partition(m: &Matroid) -> CyclicPartition {
    CyclicPartition { n: m.n(), blocks: m.components() }
}

pub fn is_noncrossing_matroid(m: &Matroid) -> bool {
    component_partition(m).is_noncrossing()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p =
            CyclicPartition::from_one_indexed(10, &[vec![1, 4, 8, 9], vec![2, 3], vec![5, 6, 7], vec![10]]).unwrap();
        assert!(p.is_noncrossing());
        assert!(p.is_noncrossing_scan());
        let q = CyclicPartition::from_one_indexed(4, &[vec![1, 3], vec![2, 4]]).unwrap();
        let c = q.crossing().unwrap();
        assert_eq!(c.witness, [1, 2, 3, 4]);
        assert!(!q.is_noncrossing_scan());
        let singles = CyclicPartition::from_one_indexed(5, &(1..=5).map(|i| vec![i]).collect::<Vec<_>>()).unwrap();
        assert!(singles.is_noncrossing());
        assert!(CyclicPartition::from_one_indexed(4, &[vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn matroid_examples() {
        let q = Matroid::from_one_indexed(4, 2, &[vec![1, 2], vec![1, 4], vec![2, 3], vec![3, 4]]).unwrap();
        assert!(!is_noncrossing_matroid(&q));
        assert!(is_noncrossing_matroid(&Matroid::uniform(2, 4)));
        let sum = Matroid::uniform(1, 2).direct_sum(&Matroid::uniform(1, 2)).unwrap();
        assert!(is_noncrossing_matroid(&sum));
    }
}
