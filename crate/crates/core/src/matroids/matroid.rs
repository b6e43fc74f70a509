use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matroids::subset::Subset;

/// Largest ground set accepted by [`Matroid`].
pub const MAX_GROUND: usize = 12;

/// A matroid on `{0, …, n−1}` given by its bases. The rank of every subset is
/// tabulated at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<Subset>,
    rank_table: Vec<u8>,
}

impl Matroid {
    /// Validates the basis family (sizes, range, exchange axiom).
    pub fn from_bases(n: usize, rank: usize, bases: Vec<Subset>) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::TooLarge(n, MAX_GROUND));
        }
        let mut bases = bases;
        bases.sort();
        bases.dedup();
        if bases.is_empty() {
            return Err(Error::Empty("basis family"));
        }
        let full = Subset::full(n);
        for b in &bases {
            if !b.is_subset_of(full) {
                return Err(Error::InvalidSubset(format!("basis {b} not inside a ground set of size {n}")));
            }
            if b.len() != rank {
                return Err(Error::InvalidSubset(format!("basis {b} does not have size {rank}")));
            }
        }
        let mut is_basis = vec![false; 1 << n];
        for b in &bases {
            is_basis[b.0 as usize] = true;
        }
        if let Some((b1, b2, e)) = exchange_violation(&bases, &is_basis) {
            return Err(Error::ExchangeViolation { first: b1.one_indexed(), second: b2.one_indexed(), element: e + 1 });
        }
        Ok(Self::assemble(n, rank, bases))
    }

    /// From 1-indexed basis lists.
    pub fn from_one_indexed(n: usize, rank: usize, bases: &[Vec<usize>]) -> Result<Self> {
        let bases = bases.iter().map(|b| Subset::from_one_indexed(b, n)).collect::<Result<Vec<_>>>()?;
        Self::from_bases(n, rank, bases)
    }

    fn assemble(n: usize, rank: usize, bases: Vec<Subset>) -> Self {
        let size = 1usize << n;
        // Independent sets are subsets of bases; propagate downwards by size.
        let mut indep = vec![false; size];
        for b in &bases {
            indep[b.0 as usize] = true;
        }
        let mut by_size: Vec<u16> = (0..size as u32).map(|x| x as u16).collect();
        by_size.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
        for &s in &by_size {
            if indep[s as usize] {
                continue;
            }
            indep[s as usize] = (0..n).any(|e| s & (1 << e) == 0 && indep[(s | (1 << e)) as usize]);
        }
        let mut rank_table = vec![0u8; size];
        for &s in by_size.iter().rev() {
            rank_table[s as usize] = if indep[s as usize] {
                s.count_ones() as u8
            } else {
                (0..n).filter(|e| s & (1 << e) != 0).map(|e| rank_table[(s & !(1 << e)) as usize]).max().unwrap_or(0)
            };
        }
        Matroid { n, rank, bases, rank_table }
    }

    pub fn uniform(rank: usize, n: usize) -> Self {
        let bases = (0..n).combinations(rank).map(|c| Subset::from_indices(&c).expect("small")).collect();
        Self::assemble(n, rank, sorted(bases))
    }

    /// The matroid in which every element is a coloop.
    pub fn free(n: usize) -> Self {
        Self::uniform(n, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    pub fn rank_of(&self, s: Subset) -> usize {
        self.rank_table[s.0 as usize] as usize
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank_of(s) == s.len()
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank_of(Subset::singleton(e)) == 0
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.bases.iter().all(|b| b.contains(e))
    }

    pub fn loops(&self) -> Subset {
        Subset((0..self.n).filter(|&e| self.is_loop(e)).fold(0, |acc, e| acc | (1 << e)))
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    /// Minimal dependent sets, sorted.
    pub fn circuits(&self) -> Vec<Subset> {
        Subset::all(self.n)
            .filter(|&s| !self.is_independent(s) && s.iter().all(|e| self.is_independent(s.without(e))))
            .collect::<Vec<_>>()
            .into_iter()
            .sorted()
            .collect()
    }

    /// Ground sets of the connected components, sorted by smallest element.
    /// Loops and coloops form singleton components.
    pub fn components(&self) -> Vec<Subset> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for c in self.circuits() {
            let mut it = c.iter();
            let first = it.next().expect("circuits are nonempty");
            for e in it {
                let (a, b) = (find(&mut parent, first), find(&mut parent, e));
                parent[a] = b;
            }
        }
        let mut blocks: Vec<Subset> = Vec::new();
        let mut root_block: Vec<Option<usize>> = vec![None; self.n];
        for e in 0..self.n {
            let r = find(&mut parent, e);
            match root_block[r] {
                Some(k) => blocks[k] = blocks[k].with(e),
                None => {
                    root_block[r] = Some(blocks.len());
                    blocks.push(Subset::singleton(e));
                }
            }
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn dual(&self) -> Self {
        let full = self.ground();
        let bases = self.bases.iter().map(|b| full.minus(*b)).collect();
        Self::assemble(self.n, self.n - self.rank, sorted(bases))
    }

    /// `self ⊕ other`, with `other` relabeled to follow `self`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_GROUND {
            return Err(Error::TooLarge(n, MAX_GROUND));
        }
        let bases =
            self.bases.iter().flat_map(|a| other.bases.iter().map(move |b| Subset(a.0 | (b.0 << self.n)))).collect();
        Ok(Self::assemble(n, self.rank + other.rank, sorted(bases)))
    }

    fn check_subset(&self, s: Subset) -> Result<()> {
        if !s.is_subset_of(self.ground()) {
            return Err(Error::InvalidSubset(format!("{s} is not inside a ground set of size {}", self.n)));
        }
        Ok(())
    }

    /// `M|S`, relabeled so that the elements of `S` become `0..|S|` in order.
    pub fn restrict(&self, s: Subset) -> Result<Self> {
        self.check_subset(s)?;
        let ground = s.indices();
        let r = self.rank_of(s);
        let bases =
            self.bases.iter().map(|b| b.intersection(s)).filter(|b| b.len() == r).map(|b| b.project(&ground)).collect();
        Ok(Self::assemble(ground.len(), r, sorted(bases)))
    }

    /// `M \ S`.
    pub fn delete(&self, s: Subset) -> Result<Self> {
        self.check_subset(s)?;
        self.restrict(s.complement(self.n))
    }

    /// `M / S`, relabeled so that the complement of `S` becomes `0..n−|S|`.
    pub fn contract(&self, s: Subset) -> Result<Self> {
        self.check_subset(s)?;
        let rest = s.complement(self.n);
        let ground = rest.indices();
        let r = self.rank_of(s);
        let bases =
            self.bases.iter().filter(|b| b.intersection(s).len() == r).map(|b| b.minus(s).project(&ground)).collect();
        Ok(Self::assemble(ground.len(), self.rank - r, sorted(bases)))
    }

    /// Non-loop elements parallel to `e` (including `e`).
    pub fn parallelism_class(&self, e: usize) -> Result<Subset> {
        if e >= self.n {
            return Err(Error::InvalidSubset(format!("element {} out of range", e + 1)));
        }
        if self.is_loop(e) {
            return Err(Error::HasLoop(e + 1));
        }
        Ok(Subset(
            (0..self.n)
                .filter(|&f| !self.is_loop(f) && self.rank_of(Subset::singleton(e).with(f)) == 1)
                .fold(0, |acc, f| acc | (1 << f)),
        ))
    }

    /// Relabels element `i` as `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidSubset("not a permutation of the ground set".into()));
        }
        let bases = self.bases.iter().map(|b| Subset(b.iter().fold(0, |acc, i| acc | (1 << perm[i])))).collect();
        Ok(Self::assemble(self.n, self.rank, sorted(bases)))
    }

    /// Relabels along the cyclic rotation `i ↦ i + shift (mod n)`.
    pub fn rotate(&self, shift: usize) -> Self {
        let perm: Vec<usize> = (0..self.n).map(|i| (i + shift) % self.n.max(1)).collect();
        self.permute(&perm).expect("rotation is a permutation")
    }

    /// Matroid with the same ground set whose bases are a subfamily of ours.
    /// The caller guarantees the family is the basis set of a matroid.
    pub(crate) fn from_trusted(n: usize, rank: usize, bases: Vec<Subset>) -> Self {
        Self::assemble(n, rank, sorted(bases))
    }
}

fn sorted(mut v: Vec<Subset>) -> Vec<Subset> {
    v.sort();
    v.dedup();
    v
}

/// A triple `(B1, B2, e)` with `e ∈ B1 \ B2` admitting no exchange partner.
fn exchange_violation(bases: &[Subset], is_basis: &[bool]) -> Option<(Subset, Subset, usize)> {
    for &b1 in bases {
        for &b2 in bases {
            for e in b1.minus(b2).iter() {
                let base = b1.without(e);
                if !b2.minus(b1).iter().any(|f| is_basis[base.with(f).0 as usize]) {
                    return Some((b1, b2, e));
                }
            }
        }
    }
    None
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(n={}, rank={}, bases={:?})", self.n, self.rank, self.bases)
    }
}

#[derive(Serialize, Deserialize)]
struct MatroidJson {
    n: usize,
    rank: usize,
    bases: Vec<Vec<usize>>,
}

impl Serialize for Matroid {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatroidJson { n: self.n, rank: self.rank, bases: self.bases.iter().map(|b| b.one_indexed()).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matroid {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MatroidJson::deserialize(d)?;
        Matroid::from_one_indexed(j.n, j.rank, &j.bases).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, r: usize, b: &[&[usize]]) -> Matroid {
        Matroid::from_one_indexed(n, r, &b.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn s(x: &[usize]) -> Subset {
        Subset::from_one_indexed(x, 12).unwrap()
    }

    #[test]
    fn construction_and_exchange() {
        let q = m(4, 2, &[&[1, 2], &[1, 4], &[2, 3], &[3, 4]]);
        assert_eq!(q.bases().len(), 4);
        assert_eq!(m(3, 2, &[&[1, 2], &[1, 3], &[2, 3]]), Matroid::uniform(2, 3));
        let err = Matroid::from_one_indexed(4, 2, &[vec![1, 2], vec![3, 4]]).unwrap_err();
        assert!(matches!(err, Error::ExchangeViolation { .. }));
        assert!(Matroid::from_one_indexed(3, 2, &[vec![1]]).is_err());
        assert!(Matroid::from_one_indexed(3, 1, &[]).is_err());
    }

    #[test]
    fn circuits_and_components() {
        assert_eq!(Matroid::uniform(2, 3).circuits(), vec![s(&[1, 2, 3])]);
        let q = m(4, 2, &[&[1, 2], &[1, 4], &[2, 3], &[3, 4]]);
        assert_eq!(q.circuits(), vec![s(&[1, 3]), s(&[2, 4])]);
        assert_eq!(q.components(), vec![s(&[1, 3]), s(&[2, 4])]);
        assert!(Matroid::uniform(2, 2).circuits().is_empty());
        let sum = Matroid::uniform(1, 2).direct_sum(&Matroid::uniform(1, 2)).unwrap();
        assert_eq!(sum.components(), vec![s(&[1, 2]), s(&[3, 4])]);
        assert_eq!(Matroid::uniform(2, 3).components(), vec![s(&[1, 2, 3])]);
    }

    #[test]
    fn minors_and_duals() {
        assert_eq!(Matroid::uniform(1, 3).dual(), Matroid::uniform(2, 3));
        assert_eq!(Matroid::uniform(2, 4).restrict(s(&[1, 2, 3])).unwrap(), Matroid::uniform(2, 3));
        assert_eq!(Matroid::uniform(2, 4).contract(s(&[1])).unwrap(), Matroid::uniform(1, 3));
        assert_eq!(Matroid::uniform(2, 4).delete(s(&[4])).unwrap(), Matroid::uniform(2, 3));
        let with_loop = m(3, 1, &[&[1], &[2]]);
        assert_eq!(with_loop.loops(), s(&[3]));
        assert!(!with_loop.is_loopless());
        assert_eq!(with_loop.parallelism_class(0).unwrap(), s(&[1, 2]));
        assert_eq!(with_loop.parallelism_class(2), Err(Error::HasLoop(3)));
        assert!(Matroid::free(3).is_coloop(1));
    }

    #[test]
    fn json_is_one_indexed() {
        let q = m(4, 2, &[&[1, 2], &[1, 4], &[2, 3], &[3, 4]]);
        let j = serde_json::to_string(&q).unwrap();
        assert_eq!(j, r#"{"n":4,"rank":2,"bases":[[1,2],[1,4],[2,3],[3,4]]}"#);
        assert_eq!(serde_json::from_str::<Matroid>(&j).unwrap(), q);
    }
}
