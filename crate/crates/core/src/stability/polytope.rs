use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exactlin::lp::{LinearProgram, Relation};
use crate::par::{self, Strategy};
use crate::rational::{int, Rational};
use crate::stability::poly::LatticePointSet;

/// Whether `p` lies in the convex hull of `points`.
pub fn hull_contains(points: &[Vec<i64>], p: &[i64]) -> bool {
    if points.is_empty() {
        return false;
    }
    let k = points.len();
    let mut lp = LinearProgram::new(k);
    for j in 0..k {
        lp.set_nonnegative(j);
    }
    lp.add(vec![Rational::one(); k], Relation::Eq, Rational::one());
    for (i, &pi) in p.iter().enumerate() {
        lp.add(points.iter().map(|q| int(q[i])).collect(), Relation::Eq, int(pi));
    }
    lp.is_feasible()
}

/// Points of `s` not in the convex hull of the other points.
pub fn vertices(s: &LatticePointSet) -> LatticePointSet {
    let pts = &s.points;
    let keep: Vec<Vec<i64>> = pts
        .iter()
        .enumerate()
        .filter(|(i, p)| {
            let others: Vec<Vec<i64>> =
                pts.iter().enumerate().filter(|(j, _)| j != i).map(|(_, q)| q.clone()).collect();
            !hull_contains(&others, p)
        })
        .map(|(_, p)| p.clone())
        .collect();
    LatticePointSet::new(s.n, keep).expect("a nonempty set has a vertex")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: Vec<i64>,
    pub to: Vec<i64>,
    /// Primitive integer direction of `to − from`.
    pub direction: Vec<i64>,
}

fn primitive_direction(u: &[i64], v: &[i64]) -> Vec<i64> {
    let d: Vec<i64> = v.iter().zip(u).map(|(a, b)| a - b).collect();
    let g = d.iter().fold(0i64, |acc, x| acc.gcd(x));
    if g == 0 {
        d
    } else {
        d.iter().map(|x| x / g).collect()
    }
}

/// Whether some linear functional is maximized over `verts` exactly on
/// `{verts[a], verts[b]}`.
fn is_edge(verts: &[Vec<i64>], a: usize, b: usize) -> bool {
    let n = verts[a].len();
    let mut lp = LinearProgram::new(n);
    let diff: Vec<Rational> = (0..n).map(|i| int(verts[a][i] - verts[b][i])).collect();
    lp.add(diff, Relation::Eq, Rational::zero());
    for (k, x) in verts.iter().enumerate() {
        if k == a || k == b {
            continue;
        }
        let row = (0..n).map(|i| int(verts[a][i] - x[i])).collect();
        lp.add(row, Relation::Ge, Rational::one());
    }
    lp.is_feasible()
}

/// Edges of the convex hull of `s`, decided by one exact LP per vertex pair.
pub fn polytope_edges(s: &LatticePointSet) -> Vec<Edge> {
    polytope_edges_with(s, Strategy::Sequential)
}

pub fn polytope_edges_with(s: &LatticePointSet, strategy: Strategy) -> Vec<Edge> {
    let verts = vertices(s).points;
    let pairs: Vec<(usize, usize)> = (0..verts.len()).flat_map(|a| (a + 1..verts.len()).map(move |b| (a, b))).collect();
    par::map(strategy, &pairs, |&(a, b)| {
        is_edge(&verts, a, b).then(|| Edge {
            from: verts[a].clone(),
            to: verts[b].clone(),
            direction: primitive_direction(&verts[a], &verts[b]),
        })
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Whether `d` is a multiple of some `e_i − e_j`.
pub fn is_root_direction(d: &[i64]) -> bool {
    let nz: Vec<i64> = d.iter().copied().filter(|x| *x != 0).collect();
    nz.len() == 2 && nz[0] == -nz[1]
}

/// Every edge of the hull points along some `e_i − e_j`.
pub fn is_generalized_permutohedron(s: &LatticePointSet) -> bool {
    polytope_edges(s).iter().all(|e| is_root_direction(&e.direction))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(pts: &[&[i64]]) -> LatticePointSet {
        LatticePointSet::new(pts[0].len(), pts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn vertices_and_edges() {
        let sq = set(&[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(vertices(&sq).points, vec![vec![0, 2], vec![2, 0]]);
        let seg = set(&[&[0, 0], &[2, 0]]);
        let e = polytope_edges(&seg);
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].direction, vec![1, 0]);
        let square = set(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(polytope_edges(&square).len(), 4);
        assert!(!is_generalized_permutohedron(&square));
        let d23 = set(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let edges = polytope_edges(&d23);
        assert_eq!(edges.len(), 3);
        assert!(is_generalized_permutohedron(&d23));
        assert!(is_generalized_permutohedron(&set(&[&[1, 2, 3]])));
    }

    #[test]
    fn hull_membership() {
        let pts = vec![vec![0, 0], vec![2, 0], vec![0, 2]];
        assert!(hull_contains(&pts, &[1, 1]));
        assert!(!hull_contains(&pts, &[2, 1]));
    }
}
