//! Bergman fans of matroids: membership, maximal cones and their spans.
//!
//! Orientation: a vector `w` lies in the fan when the minimum of `w` over
//! every circuit is attained at least twice. Under that convention the fan is
//! the set of `w` whose *maximizing* face of the matroid polytope is
//! loopless; [`membership_consistency`] checks the two descriptions against
//! each other.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroids::{all_faces, component_partition, face_matroid, Crossing, FaceMatroid, Matroid, Subset};
use crate::par::Strategy;
use crate::rational::Rational;

pub fn in_bergman_fan(m: &Matroid, w: &[Rational]) -> Result<bool> {
    if w.len() != m.n() {
        return Err(Error::Dimension(format!("weight of length {} for n = {}", w.len(), m.n())));
    }
    if !m.is_loopless() {
        return Ok(false);
    }
    Ok(m.circuits().iter().all(|c| {
        let min = c.iter().map(|i| &w[i]).min().expect("circuits are nonempty");
        c.iter().filter(|&i| &w[i] == min).count() >= 2
    }))
}

/// Evaluates membership through circuits and through the maximizing face and
/// returns the common verdict; disagreement is reported as an error.
pub fn membership_consistency(m: &Matroid, w: &[Rational]) -> Result<bool> {
    let by_circuits = in_bergman_fan(m, w)?;
    let by_face = face_matroid(m, w)?.is_loopless();
    if by_circuits != by_face {
        return Err(Error::Inconsistent(format!(
            "circuit test says {by_circuits}, face test says {by_face} for w = {:?}",
            w.iter().map(|x| x.to_string()).collect::<Vec<_>>()
        )));
    }
    Ok(by_circuits)
}

/// A cone of the Bergman fan, dual to a loopless face. Its linear span is
/// spanned by the indicator vectors of the face's connected components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergmanCone {
    pub face: FaceMatroid,
    pub span_generators: Vec<Vec<i64>>,
    pub dimension: usize,
}

impl BergmanCone {
    fn from_face(face: FaceMatroid) -> Self {
        let n = face.matroid.n();
        let comps = face.components();
        BergmanCone { span_generators: comps.iter().map(|c| c.indicator(n)).collect(), dimension: comps.len(), face }
    }

    pub fn components(&self) -> Vec<Subset> {
        self.face.components()
    }
}

fn require_loopless(m: &Matroid) -> Result<()> {
    match m.loops().min() {
        Some(e) => Err(Error::HasLoop(e + 1)),
        None => Ok(()),
    }
}

/// Cones of dimension `k` (dual to the loopless faces of dimension `n − k`).
/// The admissible range is `m ≤ k ≤ d` for `m` components and rank `d`.
pub fn cones_of_dim(m: &Matroid, k: usize, strategy: Strategy) -> Result<Vec<BergmanCone>> {
    require_loopless(m)?;
    let comps = m.components().len();
    if k < comps || k > m.rank() {
        return Err(Error::OutOfRange(format!("cone dimension {k} outside {comps}..={}", m.rank())));
    }
    Ok(all_faces(m, strategy)
        .into_iter()
        .filter(|f| f.dimension + k == m.n() && f.is_loopless())
        .map(BergmanCone::from_face)
        .collect())
}

pub fn maximal_cones(m: &Matroid, strategy: Strategy) -> Result<Vec<BergmanCone>> {
    cones_of_dim(m, m.rank(), strategy)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanCertificate {
    pub cone_dim: usize,
    pub span: Vec<Vec<i64>>,
    pub components: Vec<Vec<usize>>,
    pub crossing: Crossing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanVerdict {
    pub holds: bool,
    pub cones_checked: usize,
    pub certificate: Option<SpanCertificate>,
}

/// Whether every cone of the given dimension (default: maximal) is spanned by
/// 0/1 vectors with non-crossing supports.
pub fn noncrossing_span_condition(m: &Matroid, cone_dim: Option<usize>, strategy: Strategy) -> Result<SpanVerdict> {
    let k = cone_dim.unwrap_or(m.rank());
    let cones = cones_of_dim(m, k, strategy)?;
    let certificate = cones.iter().find_map(|c| {
        component_partition(&c.face.matroid).crossing().map(|crossing| SpanCertificate {
            cone_dim: c.dimension,
            span: c.span_generators.clone(),
            components: c.components().iter().map(|s| s.one_indexed()).collect(),
            crossing,
        })
    });
    Ok(SpanVerdict { holds: certificate.is_none(), cones_checked: cones.len(), certificate })
}

/// Closed sets other than the closure of the empty set and the ground set.
pub fn proper_flats(m: &Matroid) -> Vec<Subset> {
    let full = m.ground();
    let bottom = m.loops();
    Subset::all(m.n())
        .filter(|&s| s != full && s != bottom)
        .filter(|&s| {
            let r = m.rank_of(s);
            full.minus(s).iter().all(|e| m.rank_of(s.with(e)) > r)
        })
        .collect()
}

/// Maximal chains of proper flats. Each chain `F_1 ⊂ … ⊂ F_{d−1}` is the cone
/// spanned by the indicator vectors of its flats (modulo the all-ones
/// vector); together they subdivide the Bergman fan.
pub fn flag_cones(m: &Matroid) -> Vec<Vec<Subset>> {
    let flats = proper_flats(m);
    let target = m.rank().saturating_sub(1);
    let mut out = Vec::new();
    let mut chain = Vec::new();
    fn grow(m: &Matroid, flats: &[Subset], chain: &mut Vec<Subset>, target: usize, out: &mut Vec<Vec<Subset>>) {
        if chain.len() == target {
            out.push(chain.clone());
            return;
        }
        let r = chain.last().map_or(0, |f| m.rank_of(*f));
        let base = chain.last().copied().unwrap_or(Subset::EMPTY);
        for &f in flats {
            if m.rank_of(f) == r + 1 && base.is_subset_of(f) {
                chain.push(f);
                grow(m, flats, chain, target, out);
                chain.pop();
            }
        }
    }
    grow(m, &flats, &mut chain, target, &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeJson {
    pub dim: usize,
    pub span: Vec<Vec<i64>>,
    pub components: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanJson {
    pub cones: Vec<ConeJson>,
}

impl FanJson {
    pub fn from_cones(cones: &[BergmanCone]) -> Self {
        FanJson {
            cones: cones
                .iter()
                .map(|c| ConeJson {
                    dim: c.dimension,
                    span: c.span_generators.clone(),
                    components: c.components().iter().map(|s| s.one_indexed()).collect(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_vector;

    fn w(s: &str) -> Vec<Rational> {
        parse_vector(s).unwrap()
    }

    #[test]
    fn membership_examples() {
        let u23 = Matroid::uniform(2, 3);
        assert!(in_bergman_fan(&u23, &w("0,0,1")).unwrap());
        assert!(!in_bergman_fan(&u23, &w("0,1,2")).unwrap());
        let u12 = Matroid::uniform(1, 2);
        assert!(in_bergman_fan(&u12, &w("3,3")).unwrap());
        assert!(!in_bergman_fan(&u12, &w("3,4")).unwrap());
        assert!(membership_consistency(&u23, &w("0,0,1")).unwrap());
        assert!(!membership_consistency(&u23, &w("0,1,2")).unwrap());
        let looped = Matroid::from_one_indexed(2, 1, &[vec![1]]).unwrap();
        assert!(!in_bergman_fan(&looped, &w("0,0")).unwrap());
    }

    #[test]
    fn cone_examples() {
        let u12 = maximal_cones(&Matroid::uniform(1, 2), Strategy::Sequential).unwrap();
        assert_eq!(u12.len(), 1);
        assert_eq!(u12[0].span_generators, vec![vec![1, 1]]);
        assert_eq!(maximal_cones(&Matroid::uniform(2, 3), Strategy::Sequential).unwrap().len(), 3);
        let q = Matroid::from_one_indexed(4, 2, &[vec![1, 2], vec![1, 4], vec![2, 3], vec![3, 4]]).unwrap();
        let cones = maximal_cones(&q, Strategy::Sequential).unwrap();
        assert_eq!(cones.len(), 1);
        assert_eq!(cones[0].span_generators, vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]]);
        let v = noncrossing_span_condition(&q, None, Strategy::Sequential).unwrap();
        assert!(!v.holds);
        assert_eq!(v.certificate.unwrap().components, vec![vec![1, 3], vec![2, 4]]);
        assert!(noncrossing_span_condition(&Matroid::uniform(2, 4), None, Strategy::Sequential).unwrap().holds);
        assert!(noncrossing_span_condition(&Matroid::uniform(1, 4), None, Strategy::Sequential).unwrap().holds);
    }

    #[test]
    fn flags() {
        assert_eq!(flag_cones(&Matroid::uniform(2, 3)).len(), 3);
        assert_eq!(proper_flats(&Matroid::uniform(3, 4)).len(), 10);
        assert_eq!(flag_cones(&Matroid::uniform(3, 4)).len(), 12);
    }
}
