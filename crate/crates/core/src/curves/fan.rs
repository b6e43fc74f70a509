use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ray {
    pub vec: Vec<i64>,
    pub mult: u32,
}

/// A one-dimensional fan in `R^n / R(1, …, 1)`. Rays are normalized (minimum
/// coordinate 0, primitive), sorted, and equal rays are merged by adding
/// multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TropicalCurveFan {
    pub n: usize,
    pub rays: Vec<Ray>,
}

/// Reduces `v` modulo the all-ones vector and divides by its content.
pub fn normalize_ray(v: &[i64]) -> Result<Vec<i64>> {
    let Some(&min) = v.iter().min() else {
        return Err(Error::InvalidCurve("empty ray".into()));
    };
    let shifted: Vec<i64> = v.iter().map(|x| x - min).collect();
    let g = shifted.iter().fold(0i64, |acc, x| acc.gcd(x));
    if g == 0 {
        return Err(Error::InvalidCurve(format!("ray {v:?} is zero modulo the all-ones vector")));
    }
    Ok(shifted.iter().map(|x| x / g).collect())
}

impl TropicalCurveFan {
    pub fn new(n: usize, rays: Vec<Ray>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidCurve("need at least two coordinates".into()));
        }
        let mut out: Vec<Ray> = Vec::with_capacity(rays.len());
        for r in rays {
            if r.vec.len() != n {
                return Err(Error::Dimension(format!("ray of length {} for n = {n}", r.vec.len())));
            }
            if r.mult == 0 {
                return Err(Error::InvalidCurve("multiplicities must be positive".into()));
            }
            out.push(Ray { vec: normalize_ray(&r.vec)?, mult: r.mult });
        }
        out.sort();
        let mut merged: Vec<Ray> = Vec::with_capacity(out.len());
        for r in out {
            match merged.last_mut() {
                Some(last) if last.vec == r.vec => last.mult += r.mult,
                _ => merged.push(r),
            }
        }
        Ok(TropicalCurveFan { n, rays: merged })
    }

    /// Fan with unit multiplicity on each given vector.
    pub fn from_vectors(n: usize, vecs: &[Vec<i64>]) -> Result<Self> {
        Self::new(n, vecs.iter().map(|v| Ray { vec: v.clone(), mult: 1 }).collect())
    }

    pub fn degree(&self) -> u32 {
        self.rays.iter().map(|r| r.mult).sum()
    }

    /// `Σ mult · ray` is a multiple of the all-ones vector.
    pub fn is_balanced(&self) -> bool {
        let sum: Vec<i64> = (0..self.n).map(|i| self.rays.iter().map(|r| r.mult as i64 * r.vec[i]).sum()).collect();
        sum.iter().all(|x| *x == sum[0])
    }

    pub fn shape_report(&self) -> ShapeReport {
        let rays: Vec<RayShape> = self
            .rays
            .iter()
            .map(|r| RayShape { vec: r.vec.clone(), interval: Interval::of_indicator(&r.vec) })
            .collect();
        ShapeReport { ok: rays.iter().all(|r| r.interval.is_some()), rays }
    }

    /// Every ray is a 0/1 vector whose ones form a cyclic interval.
    pub fn rays_realizable_shape(&self) -> bool {
        self.shape_report().ok
    }

    /// Unit rays as intervals, multiplicities expanded.
    pub fn unit_intervals(&self) -> Result<Vec<Interval>> {
        let mut out = Vec::new();
        for r in &self.rays {
            let iv = Interval::of_indicator(&r.vec)
                .ok_or_else(|| Error::InvalidCurve(format!("ray {:?} is not a cyclic 0/1 block", r.vec)))?;
            out.extend(std::iter::repeat_n(iv, r.mult as usize));
        }
        Ok(out)
    }

    /// The fan with coordinates rotated so that coordinate `j` moves to
    /// `j − shift (mod n)`.
    pub fn rotate_left(&self, shift: usize) -> TropicalCurveFan {
        let rays = self
            .rays
            .iter()
            .map(|r| Ray { vec: (0..self.n).map(|j| r.vec[(j + shift) % self.n]).collect(), mult: r.mult })
            .collect();
        TropicalCurveFan::new(self.n, rays).expect("rotation keeps rays valid")
    }

    /// Multiset union.
    pub fn union(fans: &[TropicalCurveFan]) -> Result<TropicalCurveFan> {
        let n = fans.first().map(|f| f.n).ok_or(Error::Empty("fan list"))?;
        TropicalCurveFan::new(n, fans.iter().flat_map(|f| f.rays.clone()).collect())
    }
}

#[derive(Deserialize)]
struct FanJson {
    n: usize,
    rays: Vec<Ray>,
}

impl<'de> Deserialize<'de> for TropicalCurveFan {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FanJson::deserialize(d)?;
        TropicalCurveFan::new(j.n, j.rays).map_err(serde::de::Error::custom)
    }
}

/// Cyclic interval `{start, start+1, …, start+len−1} (mod n)`, 0-indexed,
/// with `0 < len < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Interval {
    pub n: usize,
    pub start: usize,
    pub len: usize,
}

impl Interval {
    pub fn new(n: usize, start: usize, len: usize) -> Result<Self> {
        if start >= n || len == 0 || len >= n {
            return Err(Error::InvalidCurve(format!("interval start {start} length {len} in n = {n}")));
        }
        Ok(Interval { n, start, len })
    }

    /// Recognizes a 0/1 vector whose support is a proper cyclic interval.
    pub fn of_indicator(v: &[i64]) -> Option<Interval> {
        let n = v.len();
        if v.iter().any(|&x| x != 0 && x != 1) {
            return None;
        }
        let len = v.iter().filter(|&&x| x == 1).count();
        if len == 0 || len == n {
            return None;
        }
        let starts: Vec<usize> = (0..n).filter(|&j| v[j] == 1 && v[(j + n - 1) % n] == 0).collect();
        (starts.len() == 1).then(|| Interval { n, start: starts[0], len })
    }

    pub fn contains(&self, j: usize) -> bool {
        (j + self.n - self.start) % self.n < self.len
    }

    /// Position right after the last element.
    pub fn next_start(&self) -> usize {
        (self.start + self.len) % self.n
    }

    pub fn indicator(&self) -> Vec<i64> {
        (0..self.n).map(|j| i64::from(self.contains(j))).collect()
    }

    pub fn rotate_left(&self, shift: usize) -> Interval {
        Interval { n: self.n, start: (self.start + self.n - shift % self.n) % self.n, len: self.len }
    }

    /// All proper cyclic intervals of `[n]`.
    pub fn all(n: usize) -> Vec<Interval> {
        (0..n).flat_map(|s| (1..n).map(move |l| Interval { n, start: s, len: l })).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RayShape {
    pub vec: Vec<i64>,
    pub interval: Option<Interval>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub ok: bool,
    pub rays: Vec<RayShape>,
}

/// An irreducible piece: blocks chained end to start, `k_1, k_2, …` being the
/// start positions. The chain is rotated to begin at its smallest start.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvePiece {
    pub n: usize,
    pub blocks: Vec<Interval>,
}

impl CurvePiece {
    /// The cycle `(k_1 k_2 … k_m)`, 1-indexed.
    pub fn cycle(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.start + 1).collect()
    }

    /// How many times the chain wraps around the circle.
    pub fn winding(&self) -> usize {
        self.blocks.iter().map(|b| b.len).sum::<usize>() / self.n
    }

    pub fn fan(&self) -> TropicalCurveFan {
        TropicalCurveFan::from_vectors(self.n, &self.blocks.iter().map(|b| b.indicator()).collect::<Vec<_>>())
            .expect("intervals are valid rays")
    }

    /// Coordinates rotated so the first block starts at position 1.
    pub fn shifted(&self) -> (usize, Vec<Interval>) {
        let shift = self.blocks[0].start;
        (shift, self.blocks.iter().map(|b| b.rotate_left(shift)).collect())
    }
}

/// Splits a balanced fan with cyclic-block rays into irreducible pieces.
///
/// Blocks are chained greedily (lowest unused index among the blocks
/// starting where the previous one ended); whenever the walk returns to a
/// start position already on the current path, the closed loop is cut off
/// as one piece. Different tie-breaking can give a different decomposition.
pub fn decompose_irreducible(fan: &TropicalCurveFan) -> Result<Vec<CurvePiece>> {
    if !fan.is_balanced() {
        return Err(Error::InvalidCurve("fan is not balanced".into()));
    }
    let blocks = fan.unit_intervals()?;
    let mut used = vec![false; blocks.len()];
    let mut pieces = Vec::new();
    while let Some(first) = used.iter().position(|u| !u) {
        used[first] = true;
        let mut path = vec![first];
        while let Some(&last) = path.last() {
            let want = blocks[last].next_start();
            if let Some(pos) = path.iter().position(|&b| blocks[b].start == want) {
                let cycle: Vec<Interval> = path.drain(pos..).map(|b| blocks[b]).collect();
                pieces.push(canonical_piece(fan.n, cycle));
                continue;
            }
            let next = (0..blocks.len())
                .find(|&b| !used[b] && blocks[b].start == want)
                .ok_or_else(|| Error::InvalidCurve(format!("no block starts at position {}", want + 1)))?;
            used[next] = true;
            path.push(next);
        }
    }
    Ok(pieces)
}

fn canonical_piece(n: usize, mut blocks: Vec<Interval>) -> CurvePiece {
    let k = (0..blocks.len()).min_by_key(|&i| blocks[i].start).expect("nonempty cycle");
    blocks.rotate_left(k);
    CurvePiece { n, blocks }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example_fan() -> TropicalCurveFan {
        TropicalCurveFan::from_vectors(
            6,
            &[vec![0, 1, 1, 1, 0, 0], vec![1, 1, 0, 0, 1, 1], vec![0, 0, 1, 1, 1, 0], vec![1, 0, 0, 0, 0, 1]],
        )
        .unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_ray(&[3, 5, 3]).unwrap(), vec![0, 1, 0]);
        assert_eq!(normalize_ray(&[-1, 0, -1, -1]).unwrap(), vec![0, 1, 0, 0]);
        assert!(normalize_ray(&[2, 2, 2]).is_err());
        let f = TropicalCurveFan::from_vectors(3, &[vec![1, 0, 0], vec![2, 0, 0]]).unwrap();
        assert_eq!(f.rays, vec![Ray { vec: vec![1, 0, 0], mult: 2 }]);
    }

    #[test]
    fn balance_and_shape() {
        let f = example_fan();
        assert!(f.is_balanced());
        assert!(f.rays_realizable_shape());
        assert!(!TropicalCurveFan::from_vectors(3, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap().is_balanced());
        let id: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| i64::from(i == j)).collect()).collect();
        assert!(TropicalCurveFan::from_vectors(4, &id).unwrap().is_balanced());
        assert_eq!(Interval::of_indicator(&[1, 1, 0, 0, 1]), Some(Interval { n: 5, start: 4, len: 3 }));
        assert_eq!(Interval::of_indicator(&[1, 0, 1, 0]), None);
    }

    #[test]
    fn example_decomposes_to_one_cycle() {
        let pieces = decompose_irreducible(&example_fan()).unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].cycle(), vec![2, 5, 3, 6]);
        assert_eq!(pieces[0].winding(), 2);
        let (shift, blocks) = pieces[0].shifted();
        assert_eq!(shift, 1);
        assert_eq!(blocks.iter().map(|b| b.start + 1).collect::<Vec<_>>(), vec![1, 4, 2, 5]);
    }

    #[test]
    fn two_pieces() {
        let f = TropicalCurveFan::from_vectors(
            6,
            &[vec![1, 1, 1, 0, 0, 0], vec![0, 0, 0, 1, 1, 1], vec![1, 1, 1, 1, 1, 0], vec![0, 0, 0, 0, 0, 1]],
        )
        .unwrap();
        let pieces = decompose_irreducible(&f).unwrap();
        assert_eq!(pieces.len(), 2);
        assert_eq!(TropicalCurveFan::union(&pieces.iter().map(|p| p.fan()).collect::<Vec<_>>()).unwrap(), f);
    }
}
