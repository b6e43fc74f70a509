//! Faces of the matroid polytope, described by their face matroids.

use std::collections::HashSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matroids::matroid::Matroid;
use crate::matroids::subset::Subset;
use crate::par::{self, Strategy};
use crate::rational::{int, Rational};

/// The face of the matroid polytope on which `weight · x` is maximal. Its
/// matroid lives on the same ground set as the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceMatroid {
    pub matroid: Matroid,
    pub weight: Vec<Rational>,
    pub dimension: usize,
}

impl FaceMatroid {
    fn new(matroid: Matroid, weight: Vec<Rational>) -> Self {
        let dimension = matroid.n() - matroid.components().len();
        FaceMatroid { matroid, weight, dimension }
    }

    pub fn components(&self) -> Vec<Subset> {
        self.matroid.components()
    }

    pub fn is_loopless(&self) -> bool {
        self.matroid.is_loopless()
    }
}

fn check_weight(m: &Matroid, w: &[Rational]) -> Result<()> {
    if w.len() != m.n() {
        return Err(Error::Dimension(format!("weight of length {} for n = {}", w.len(), m.n())));
    }
    Ok(())
}

/// Face maximizing `w`, computed from the weight-maximal bases.
pub fn face_matroid(m: &Matroid, w: &[Rational]) -> Result<FaceMatroid> {
    check_weight(m, w)?;
    let weigh = |b: &Subset| b.iter().fold(Rational::zero(), |acc, i| acc + &w[i]);
    let best = m.bases().iter().map(weigh).max().expect("bases are nonempty");
    let bases = m.bases().iter().copied().filter(|b| weigh(b) == best).collect();
    Ok(FaceMatroid::new(Matroid::from_trusted(m.n(), m.rank(), bases), w.to_vec()))
}

/// Face maximizing `w`, computed as the direct sum of the minors
/// `(M|U_k)/U_{k−1}` over the upper level sets `U_1 ⊂ U_2 ⊂ …` of `w`.
pub fn face_matroid_layered(m: &Matroid, w: &[Rational]) -> Result<Matroid> {
    check_weight(m, w)?;
    let mut levels: Vec<&Rational> = w.iter().collect();
    levels.sort();
    levels.dedup();
    levels.reverse();
    let mut prev = Subset::EMPTY;
    let mut bases = vec![Subset::EMPTY];
    for level in levels {
        let layer = Subset::from_indices(&(0..m.n()).filter(|&i| &w[i] == level).collect::<Vec<_>>())?;
        let upper = prev.union(layer);
        let up_ground = upper.indices();
        let minor = m.restrict(upper)?.contract(prev.project(&up_ground))?;
        let layer_ground = layer.indices();
        let pieces: Vec<Subset> = minor.bases().iter().map(|b| b.lift(&layer_ground)).collect();
        bases = bases.iter().flat_map(|b| pieces.iter().map(move |p| b.union(*p))).collect();
        prev = upper;
    }
    Ok(Matroid::from_trusted(m.n(), m.rank(), bases))
}

/// Weight that is constant on each block of an ordered set partition and
/// decreasing along it.
fn chain_weight(n: usize, chain: &[Subset]) -> Vec<Rational> {
    let mut w = vec![Rational::zero(); n];
    let top = chain.len() as i64;
    for (k, block) in chain.iter().enumerate() {
        for e in block.iter() {
            w[e] = int(top - 1 - k as i64);
        }
    }
    w
}

struct FaceSearch<'a> {
    m: &'a Matroid,
    seen: HashSet<(Subset, Vec<Subset>)>,
    found: Vec<(Vec<Subset>, Vec<Subset>)>,
}

impl FaceSearch<'_> {
    fn visit(&mut self, upper: Subset, face: Vec<Subset>, chain: &mut Vec<Subset>) {
        let full = self.m.ground();
        if upper == full {
            self.found.push((face, chain.clone()));
            return;
        }
        if !self.seen.insert((upper, face.clone())) {
            return;
        }
        for block in full.minus(upper).nonempty_subsets() {
            let next = upper.union(block);
            let r = self.m.rank_of(next);
            let refined: Vec<Subset> = face.iter().copied().filter(|b| b.intersection(next).len() == r).collect();
            chain.push(block);
            self.visit(next, refined, chain);
            chain.pop();
        }
    }
}

/// Every face of the matroid polytope, each once, sorted by basis family.
/// Faces are found by sweeping ordered set partitions of the ground set (the
/// braid fan refines the normal fan), pruning repeated partial states.
pub fn all_faces(m: &Matroid, strategy: Strategy) -> Vec<FaceMatroid> {
    let full = m.ground();
    let first: Vec<Subset> = full.nonempty_subsets().collect();
    let per_branch = par::map(strategy, &first, |&block| {
        let mut search = FaceSearch { m, seen: HashSet::new(), found: Vec::new() };
        let r = m.rank_of(block);
        let face = m.bases().iter().copied().filter(|b| b.intersection(block).len() == r).collect();
        search.visit(block, face, &mut vec![block]);
        search.found
    });
    let mut seen = HashSet::new();
    let mut faces: Vec<(Vec<Subset>, Vec<Subset>)> = Vec::new();
    for (face, chain) in per_branch.into_iter().flatten() {
        if seen.insert(face.clone()) {
            faces.push((face, chain));
        }
    }
    faces.sort();
    faces
        .into_iter()
        .map(|(bases, chain)| {
            FaceMatroid::new(Matroid::from_trusted(m.n(), m.rank(), bases), chain_weight(m.n(), &chain))
        })
        .collect()
}

/// Every loopless face of dimension `k`. Loopless faces have dimension at
/// least `n − d`, so smaller `k` yields an empty list; `k` above the
/// dimension `n − m` of the polytope is rejected.
pub fn loopless_faces_of_dim(m: &Matroid, k: usize, strategy: Strategy) -> Result<Vec<FaceMatroid>> {
    let top = m.n() - m.components().len();
    if k > top {
        return Err(Error::OutOfRange(format!("face dimension {k} exceeds polytope dimension {top}")));
    }
    if k + m.rank() < m.n() {
        return Ok(Vec::new());
    }
    Ok(all_faces(m, strategy).into_iter().filter(|f| f.dimension == k && f.is_loopless()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_vector;

    fn four_cycle() -> Matroid {
        Matroid::from_one_indexed(4, 2, &[vec![1, 2], vec![1, 4], vec![2, 3], vec![3, 4]]).unwrap()
    }

    #[test]
    fn weight_faces() {
        let u23 = Matroid::uniform(2, 3);
        let f = face_matroid(&u23, &parse_vector("0,0,0").unwrap()).unwrap();
        assert_eq!(f.matroid, u23);
        let f = face_matroid(&u23, &parse_vector("1,0,0").unwrap()).unwrap();
        assert_eq!(f.matroid.bases().len(), 2);
        assert_eq!(f.dimension, 1);
        let f = face_matroid(&four_cycle(), &parse_vector("1,1,0,0").unwrap()).unwrap();
        assert_eq!(f.matroid.bases(), &[Subset::from_indices(&[0, 1]).unwrap()]);
        assert_eq!(f.dimension, 0);
    }

    #[test]
    fn layered_agrees() {
        let q = four_cycle();
        for w in ["1,1,0,0", "0,1/2,-1,1/2", "3,3,3,3", "1,2,3,4"] {
            let w = parse_vector(w).unwrap();
            assert_eq!(face_matroid(&q, &w).unwrap().matroid, face_matroid_layered(&q, &w).unwrap());
        }
    }

    #[test]
    fn face_counts() {
        // The hypersimplex Δ(2,4) is an octahedron: 6 + 12 + 8 + 1 faces.
        assert_eq!(all_faces(&Matroid::uniform(2, 4), Strategy::Sequential).len(), 27);
        let u23 = Matroid::uniform(2, 3);
        assert_eq!(loopless_faces_of_dim(&u23, 1, Strategy::Sequential).unwrap().len(), 3);
        assert_eq!(loopless_faces_of_dim(&Matroid::uniform(2, 2), 0, Strategy::Sequential).unwrap().len(), 1);
        assert!(loopless_faces_of_dim(&four_cycle(), 1, Strategy::Sequential).unwrap().is_empty());
        assert!(loopless_faces_of_dim(&u23, 3, Strategy::Sequential).is_err());
    }

    #[test]
    fn chain_weights_reproduce_faces() {
        let q = Matroid::uniform(2, 4);
        for f in all_faces(&q, Strategy::Parallel) {
            assert_eq!(face_matroid(&q, &f.weight).unwrap().matroid, f.matroid);
        }
    }
}
