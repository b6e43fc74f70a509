use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::signvar::{varbar, SignPattern};

/// `φ(x)_i = signs[i] · x_{perm[i]}` (0-indexed internally, 1-indexed in JSON).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::Dimension(format!("{} signs for {n} positions", signs.len())));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidSubset(format!("{perm:?} is not a permutation")));
            }
        }
        if let Some(s) = signs.iter().find(|s| s.abs() != 1) {
            return Err(Error::OutOfRange(format!("sign {s}")));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { perm: (0..n).collect(), signs: vec![1; n] }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn apply<T: Clone + std::ops::Neg<Output = T>>(&self, x: &[T]) -> Vec<T> {
        self.perm.iter().zip(&self.signs).map(|(&p, &s)| if s < 0 { -x[p].clone() } else { x[p].clone() }).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        SignedPermutation {
            perm: self.perm.iter().map(|&p| other.perm[p]).collect(),
            signs: self.perm.iter().zip(&self.signs).map(|(&p, &s)| s * other.signs[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for (i, (&p, &s)) in self.perm.iter().zip(&self.signs).enumerate() {
            perm[p] = i;
            signs[p] = s;
        }
        SignedPermutation { perm, signs }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    pub fn order(&self) -> usize {
        let mut g = self.clone();
        let mut k = 1;
        while !g.is_identity() {
            g = self.compose(&g);
            k += 1;
        }
        k
    }

    /// Image of the sign pattern with base-3 index `idx`.
    fn act_on_index(&self, idx: usize, pow3: &[usize]) -> usize {
        let mut out = 0;
        for (i, (&p, &s)) in self.perm.iter().zip(&self.signs).enumerate() {
            let d = (idx / pow3[p]) % 3;
            let d = if s < 0 { 2 - d } else { d };
            out += d * pow3[i];
        }
        out
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| format!("{}x{}", if s < 0 { "-" } else { "" }, p + 1))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct PermJson {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl Serialize for SignedPermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PermJson { perm: self.perm.iter().map(|p| p + 1).collect(), signs: self.signs.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedPermutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PermJson::deserialize(d)?;
        if j.perm.contains(&0) {
            return Err(serde::de::Error::custom("permutation entries are 1-indexed"));
        }
        SignedPermutation::new(j.perm.iter().map(|p| p - 1).collect(), j.signs).map_err(serde::de::Error::custom)
    }
}

/// `cyc_c(x) = ((−1)^{c−1} x_n, x_1, …, x_{n−1})`.
pub fn cyc(c: usize, n: usize) -> SignedPermutation {
    let mut signs = vec![1; n];
    if c.is_multiple_of(2) {
        signs[0] = -1;
    }
    SignedPermutation { perm: (0..n).map(|i| (i + n - 1) % n).collect(), signs }
}

/// `rev(x) = (x_n, …, x_1)`.
pub fn rev(n: usize) -> SignedPermutation {
    SignedPermutation { perm: (0..n).rev().collect(), signs: vec![1; n] }
}

/// `−id`.
pub fn neg(n: usize) -> SignedPermutation {
    SignedPermutation { perm: (0..n).collect(), signs: vec![-1; n] }
}

/// Patterns of length `n` with `varbar < c`, as base-3 indices.
struct Threshold {
    pow3: Vec<usize>,
    low: Vec<bool>,
    members: Vec<usize>,
}

impl Threshold {
    fn new(n: usize, c: usize) -> Self {
        let pow3: Vec<usize> = (0..n).map(|i| 3usize.pow(i as u32)).collect();
        let total = 3usize.pow(n as u32);
        let zero = total / 2;
        let low: Vec<bool> = (0..total).map(|i| i != zero && varbar(&SignPattern::from_index(i, n)) < c).collect();
        let members = (0..total).filter(|&i| low[i]).collect();
        Threshold { pow3, low, members }
    }

    fn preserved_by(&self, phi: &SignedPermutation) -> bool {
        self.members.iter().all(|&i| self.low[phi.act_on_index(i, &self.pow3)])
    }
}

fn check_threshold(n: usize, c: usize) -> Result<()> {
    if c == 0 || c >= n {
        return Err(Error::OutOfRange(format!("c = {c} must lie in 1..={}", n.saturating_sub(1))));
    }
    Ok(())
}

/// Whether `φ` maps every nonzero sign pattern with `varbar < c` to one with
/// `varbar < c`. Checked over all `3^n − 1` patterns.
pub fn preserves_threshold(phi: &SignedPermutation, c: usize) -> Result<bool> {
    check_threshold(phi.n(), c)?;
    Ok(Threshold::new(phi.n(), c).preserved_by(phi))
}

/// Closure of `gens` under composition.
pub fn generate_group(gens: &[SignedPermutation]) -> HashSet<SignedPermutation> {
    let Some(first) = gens.first() else {
        return HashSet::new();
    };
    let id = SignedPermutation::identity(first.n());
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for h in gens {
            let next = h.compose(&g);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Generators of the expected preserver group: `S_n` and `−id` when `c = 1`,
/// the alternation-preserving copy of `S_n` and `−id` when `c = n − 1`, and
/// `cyc_c`, `rev`, `−id` otherwise.
pub fn expected_generators(n: usize, c: usize) -> Vec<SignedPermutation> {
    let swap = |i: usize, alternating: bool| {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        let signs =
            if alternating { (0..n).map(|k| if k == i || k == i + 1 { -1 } else { 1 }).collect() } else { vec![1; n] };
        SignedPermutation { perm, signs }
    };
    let mut gens = if c == 1 {
        (0..n - 1).map(|i| swap(i, false)).collect()
    } else if c == n - 1 {
        (0..n - 1).map(|i| swap(i, true)).collect()
    } else {
        vec![cyc(c, n), rev(n)]
    };
    gens.push(neg(n));
    gens
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreserverReport {
    pub n: usize,
    pub c: usize,
    /// Number of signed permutations passing the threshold test.
    pub order: usize,
    pub generated_order: usize,
    /// Whether the brute-force group equals the group generated by
    /// [`expected_generators`].
    pub generator_match: bool,
    /// Element order to number of elements of that order.
    pub element_order_multiset: BTreeMap<usize, usize>,
    pub generators: Vec<SignedPermutation>,
}

/// Largest `n` accepted by [`preserver_subgroup`].
pub const MAX_PRESERVER_N: usize = 7;

pub fn all_signed_permutations(n: usize) -> Vec<SignedPermutation> {
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut out = Vec::with_capacity(perms.len() << n);
    for p in perms {
        for mask in 0..1usize << n {
            let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            out.push(SignedPermutation { perm: p.clone(), signs });
        }
    }
    out
}

pub fn preserver_subgroup(n: usize, c: usize) -> Result<PreserverReport> {
    preserver_subgroup_with(n, c, Strategy::default())
}

/// Filters all `2^n · n!` signed permutations through the threshold test and
/// compares with the expected generators.
pub fn preserver_subgroup_with(n: usize, c: usize, strategy: Strategy) -> Result<PreserverReport> {
    if n > MAX_PRESERVER_N {
        return Err(Error::TooLarge(n, MAX_PRESERVER_N));
    }
    check_threshold(n, c)?;
    let table = Threshold::new(n, c);
    let all = all_signed_permutations(n);
    let group: Vec<SignedPermutation> =
        par::filter_map_range(strategy, 0..all.len(), |i| table.preserved_by(&all[i]).then(|| all[i].clone()));
    let gens = expected_generators(n, c);
    let generated = generate_group(&gens);
    let brute: HashSet<SignedPermutation> = group.iter().cloned().collect();
    let mut element_order_multiset = BTreeMap::new();
    for g in &group {
        *element_order_multiset.entry(g.order()).or_insert(0) += 1;
    }
    Ok(PreserverReport {
        n,
        c,
        order: group.len(),
        generated_order: generated.len(),
        generator_match: brute == generated,
        element_order_multiset,
        generators: gens,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_act_as_displayed() {
        let x = [1i64, 2, 3];
        assert_eq!(cyc(1, 3).apply(&x), vec![3, 1, 2]);
        assert_eq!(cyc(2, 3).apply(&x), vec![-3, 1, 2]);
        assert_eq!(rev(3).apply(&x), vec![3, 2, 1]);
        assert_eq!(neg(3).apply(&x), vec![-1, -2, -3]);
    }

    #[test]
    fn compose_and_inverse() {
        let a = cyc(2, 5);
        let b = rev(5).compose(&neg(5));
        let x = [1i64, 2, 3, 4, 5];
        assert_eq!(a.compose(&b).apply(&x), a.apply(&b.apply(&x)));
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(b.inverse().compose(&b).is_identity());
        assert_eq!(cyc(3, 6).order(), 6);
        assert_eq!(cyc(2, 6).order(), 12);
    }

    #[test]
    fn threshold_examples() {
        assert!(preserves_threshold(&neg(4), 2).unwrap());
        assert!(preserves_threshold(&SignedPermutation::identity(4), 2).unwrap());
        let swap = SignedPermutation::new(vec![1, 0, 2, 3], vec![1; 4]).unwrap();
        assert!(!preserves_threshold(&swap, 2).unwrap());
        assert!(preserves_threshold(&cyc(2, 4), 2).unwrap());
        assert!(!preserves_threshold(&cyc(1, 4), 2).unwrap());
    }

    #[test]
    fn small_groups() {
        let r = preserver_subgroup(5, 1).unwrap();
        assert_eq!(r.order, 240);
        assert!(r.generator_match);
        let r = preserver_subgroup(5, 2).unwrap();
        assert_eq!(r.order, 20);
        assert!(r.generator_match);
    }
}
