use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set a `Subset` can index.
pub const MAX_ELEMENTS: usize = 16;

/// A subset of `{0, …, 15}` as a bitmask. Elements are 0-indexed internally;
/// text and JSON forms are 1-indexed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(pub u16);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_ELEMENTS);
        Subset(((1u32 << n) - 1) as u16)
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    pub fn from_indices(items: &[usize]) -> Result<Subset> {
        let mut s = 0u16;
        for &i in items {
            if i >= MAX_ELEMENTS {
                return Err(Error::InvalidSubset(format!("element {} out of range", i + 1)));
            }
            s |= 1 << i;
        }
        Ok(Subset(s))
    }

    /// From 1-indexed elements that must lie in `1..=n`.
    pub fn from_one_indexed(items: &[usize], n: usize) -> Result<Subset> {
        let mut s = 0u16;
        for &i in items {
            if i == 0 || i > n {
                return Err(Error::InvalidSubset(format!("element {i} not in 1..={n}")));
            }
            if s & (1 << (i - 1)) != 0 {
                return Err(Error::InvalidSubset(format!("element {i} repeated")));
            }
            s |= 1 << (i - 1);
        }
        Ok(Subset(s))
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: Subset) -> Subset {
        Subset(self.0 | o.0)
    }

    pub fn intersection(self, o: Subset) -> Subset {
        Subset(self.0 & o.0)
    }

    pub fn minus(self, o: Subset) -> Subset {
        Subset(self.0 & !o.0)
    }

    pub fn is_subset_of(self, o: Subset) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn complement(self, n: usize) -> Subset {
        Subset::full(n).minus(self)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 15 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..MAX_ELEMENTS).filter(move |i| bits & (1 << i) != 0)
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn one_indexed(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Indicator vector of length `n`.
    pub fn indicator(self, n: usize) -> Vec<i64> {
        (0..n).map(|i| i64::from(self.contains(i))).collect()
    }

    /// All subsets of `0..n`.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..1u32 << n).map(|b| Subset(b as u16))
    }

    /// Nonempty subsets of `self`.
    pub fn nonempty_subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut cur = full;
        let mut done = full == 0;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = cur;
            cur = (cur.wrapping_sub(1)) & full;
            if cur == 0 {
                done = true;
            }
            Some(Subset(out))
        })
    }

    /// Relabels along `ground` (increasing original labels): element `k` of
    /// the result is `ground[k]`.
    pub fn lift(self, ground: &[usize]) -> Subset {
        Subset(self.iter().fold(0, |acc, k| acc | (1 << ground[k])))
    }

    /// Inverse of [`Subset::lift`]; elements outside `ground` are dropped.
    pub fn project(self, ground: &[usize]) -> Subset {
        Subset(ground.iter().enumerate().filter(|(_, &g)| self.contains(g)).fold(0, |acc, (k, _)| acc | (1 << k)))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the sorted element lists.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            write!(f, "{}{}", if k > 0 { "," } else { "" }, i + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
