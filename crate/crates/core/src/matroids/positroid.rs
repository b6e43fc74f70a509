use serde::Serialize;

use crate::matroids::faces::{loopless_faces_of_dim, FaceMatroid};
use crate::matroids::matroid::Matroid;
use crate::matroids::noncrossing::{component_partition, Crossing};
use crate::par::Strategy;
use crate::rational::Rational;

/// Why a matroid fails to be a positroid: a loopless face of the polytope
/// whose connected components cross. Everything is in the labels of the
/// input matroid (1-indexed).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositroidCertificate {
    pub face_bases: Vec<Vec<usize>>,
    #[serde(with = "crate::rational::serde_rational_vec")]
    pub face_weight: Vec<Rational>,
    pub face_dimension: usize,
    pub components: Vec<Vec<usize>>,
    pub crossing: Crossing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositroidVerdict {
    pub is_positroid: bool,
    /// Loops removed before testing, 1-indexed.
    pub stripped_loops: Vec<usize>,
    pub certificate: Option<PositroidCertificate>,
}

fn certificate(face: &FaceMatroid, ground: &[usize], n: usize) -> Option<PositroidCertificate> {
    let crossing = component_partition(&face.matroid).crossing()?;
    let relabel = |xs: &[usize]| xs.iter().map(|&x| ground[x - 1] + 1).collect::<Vec<_>>();
    // Loops get weight below every other entry so the face is unchanged.
    let low = face.weight.iter().min().cloned().unwrap_or_default() - Rational::from_integer(1.into());
    let mut weight = vec![low; n];
    for (k, &g) in ground.iter().enumerate() {
        weight[g] = face.weight[k].clone();
    }
    Some(PositroidCertificate {
        face_bases: face.matroid.bases().iter().map(|b| b.lift(ground).one_indexed()).collect(),
        face_weight: weight,
        face_dimension: face.dimension,
        components: face.components().iter().map(|c| c.lift(ground).one_indexed()).collect(),
        crossing: Crossing {
            blocks: (relabel(&crossing.blocks.0), relabel(&crossing.blocks.1)),
            witness: [
                ground[crossing.witness[0] - 1] + 1,
                ground[crossing.witness[1] - 1] + 1,
                ground[crossing.witness[2] - 1] + 1,
                ground[crossing.witness[3] - 1] + 1,
            ],
        },
    })
}

/// Decides whether `m` is a positroid for the natural cyclic order.
///
/// Loops are removed first. With `m` components and rank `d` after that:
/// if `m = d` the components must be non-crossing (they are then uniform of
/// rank one); if `m < d` every loopless face of dimension `n − d` must be a
/// non-crossing matroid.
pub fn is_positroid(m: &Matroid) -> PositroidVerdict {
    is_positroid_with(m, Strategy::default())
}

pub fn is_positroid_with(m: &Matroid, strategy: Strategy) -> PositroidVerdict {
    let loops = m.loops();
    let keep = loops.complement(m.n());
    let ground = keep.indices();
    let core = m.restrict(keep).expect("subset of the ground set");
    let stripped_loops = loops.one_indexed();
    let n = core.n();
    let d = core.rank();
    let comps = core.components().len();
    let candidates: Vec<FaceMatroid> = if n == 0 || comps == d {
        let dimension = n - comps;
        vec![FaceMatroid { matroid: core.clone(), weight: vec![Rational::default(); n], dimension }]
    } else {
        loopless_faces_of_dim(&core, n - d, strategy).expect("n − d lies in range")
    };
    let cert = candidates.iter().find_map(|f| certificate(f, &ground, m.n()));
    PositroidVerdict { is_positroid: cert.is_none(), stripped_loops, certificate: cert }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle_fails_with_blocks() {
        let q = Matroid::from_one_indexed(4, 2, &[vec![1, 2], vec![1, 4], vec![2, 3], vec![3, 4]]).unwrap();
        let v = is_positroid(&q);
        assert!(!v.is_positroid);
        let c = v.certificate.unwrap();
        assert_eq!(c.components, vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(c.crossing.blocks, (vec![1, 3], vec![2, 4]));
    }

    #[test]
    fn uniform_and_free() {
        for n in 1..=5 {
            for d in 0..=n {
                assert!(is_positroid(&Matroid::uniform(d, n)).is_positroid, "U({d},{n})");
            }
        }
        assert!(is_positroid(&Matroid::free(4)).is_positroid);
    }

    #[test]
    fn loops_are_stripped_and_labels_kept() {
        // Parallel pair {1,3} and {2,4}... with a loop inserted at position 3.
        let m = Matroid::from_one_indexed(5, 2, &[vec![1, 2], vec![1, 5], vec![2, 4], vec![4, 5]]).unwrap();
        let v = is_positroid(&m);
        assert_eq!(v.stripped_loops, vec![3]);
        assert!(!v.is_positroid);
        assert_eq!(v.certificate.unwrap().components, vec![vec![1, 4], vec![2, 5]]);
    }
}
