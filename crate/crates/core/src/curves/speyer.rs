use serde::{Deserialize, Serialize};

use crate::curves::fan::{CurvePiece, Interval, Ray, TropicalCurveFan};
use crate::error::{Error, Result};
use crate::rational::{int, serde_rational_vec, ComplexRational, Rational};

/// `sign · Π s_k` over a multiset of 1-based root indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpeyerCoordinate {
    pub sign: i8,
    pub factors: Vec<usize>,
}

/// A rational curve `(u, v) ↦ (± Π s_k)_j` with `s_k = u − r_k v`.
///
/// `shift` records the cyclic rotation used to build it: coordinate `j` here
/// is coordinate `j + shift` of the original fan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpeyerParam {
    pub n: usize,
    #[serde(with = "serde_rational_vec")]
    pub roots: Vec<Rational>,
    pub shift: usize,
    pub coordinates: Vec<SpeyerCoordinate>,
}

impl SpeyerParam {
    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    pub fn degree(&self) -> usize {
        self.coordinates.first().map_or(0, |c| c.factors.len())
    }

    pub fn validate(&self) -> Result<()> {
        if self.coordinates.len() != self.n {
            return Err(Error::Dimension(format!("{} coordinates for n = {}", self.coordinates.len(), self.n)));
        }
        let d = self.degree();
        for c in &self.coordinates {
            if c.factors.len() != d {
                return Err(Error::InvalidCurve("coordinates have different degrees".into()));
            }
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::InvalidCurve(format!("sign {}", c.sign)));
            }
            if let Some(&k) = c.factors.iter().find(|&&k| k == 0 || k > self.roots.len()) {
                return Err(Error::OutOfRange(format!("root index {k}")));
            }
        }
        let mut r = self.roots.clone();
        r.sort();
        if r.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCurve("root constants must be distinct".into()));
        }
        Ok(())
    }

    pub fn evaluate(&self, u: &ComplexRational, v: &ComplexRational) -> Vec<ComplexRational> {
        let s: Vec<ComplexRational> = self.roots.iter().map(|r| u - &(v * &ComplexRational::real(r.clone()))).collect();
        self.coordinates
            .iter()
            .map(|c| {
                let p = c.factors.iter().fold(ComplexRational::real(int(1)), |acc, &k| &acc * &s[k - 1]);
                if c.sign < 0 {
                    -p
                } else {
                    p
                }
            })
            .collect()
    }

    /// Same curve with every sign set to `+`.
    pub fn unsigned(&self) -> SpeyerParam {
        let mut p = self.clone();
        p.coordinates.iter_mut().for_each(|c| c.sign = 1);
        p
    }

    /// Undoes the rotation by applying `cyc_c` (`c = n − 2`) `shift` times,
    /// which keeps the curve positively hyperbolic: coordinates that wrap
    /// around pick up the sign `(−1)^{c−1}`.
    pub fn in_original_coordinates(&self) -> SpeyerParam {
        let n = self.n;
        let wrap: i8 = if n % 2 == 1 { 1 } else { -1 };
        let coordinates = (0..n)
            .map(|j| {
                if j < self.shift {
                    let c = &self.coordinates[n - self.shift + j];
                    SpeyerCoordinate { sign: c.sign * wrap, factors: c.factors.clone() }
                } else {
                    self.coordinates[j - self.shift].clone()
                }
            })
            .collect();
        SpeyerParam { n, roots: self.roots.clone(), shift: 0, coordinates }
    }

    /// Keeps coordinates `start..start + len` (0-indexed, not wrapping).
    pub fn project_consecutive(&self, start: usize, len: usize) -> Result<SpeyerParam> {
        if len < 2 || start + len > self.n {
            return Err(Error::OutOfRange(format!("coordinates {start}..{} of {}", start + len, self.n)));
        }
        Ok(SpeyerParam {
            n: len,
            roots: self.roots.clone(),
            shift: 0,
            coordinates: self.coordinates[start..start + len].to_vec(),
        })
    }
}

/// Default root constants `1, 2, …, ℓ`.
pub fn default_roots(l: usize) -> Vec<Rational> {
    (1..=l as i64).map(int).collect()
}

pub fn speyer_parametrization(piece: &CurvePiece) -> Result<SpeyerParam> {
    speyer_parametrization_with_roots(piece, default_roots(piece.blocks.len()))
}

/// Rotates `piece` so its first block starts at coordinate 1; coordinate `j`
/// gets the product of `s_k` over the blocks `k` covering it and the sign
/// `(−1)^{j−1}`.
pub fn speyer_parametrization_with_roots(piece: &CurvePiece, roots: Vec<Rational>) -> Result<SpeyerParam> {
    check_chain(piece)?;
    if roots.len() != piece.blocks.len() {
        return Err(Error::Dimension(format!("{} roots for {} blocks", roots.len(), piece.blocks.len())));
    }
    let (shift, blocks) = piece.shifted();
    let coordinates = (0..piece.n)
        .map(|j| SpeyerCoordinate {
            sign: if j % 2 == 0 { 1 } else { -1 },
            factors: (0..blocks.len()).filter(|&k| blocks[k].contains(j)).map(|k| k + 1).collect(),
        })
        .collect();
    let p = SpeyerParam { n: piece.n, roots, shift, coordinates };
    p.validate()?;
    Ok(p)
}

fn check_chain(piece: &CurvePiece) -> Result<()> {
    let b = &piece.blocks;
    if b.is_empty() {
        return Err(Error::Empty("curve piece"));
    }
    for i in 0..b.len() {
        if b[i].next_start() != b[(i + 1) % b.len()].start {
            return Err(Error::InvalidCurve(format!(
                "block {} does not end where block {} starts",
                i + 1,
                (i + 1) % b.len() + 1
            )));
        }
    }
    let mut starts: Vec<usize> = b.iter().map(|x| x.start).collect();
    starts.sort_unstable();
    if starts.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidCurve("chain revisits a start position, so it is reducible".into()));
    }
    Ok(())
}

/// Walking along the coordinates, each step either keeps the multiset or
/// replaces exactly one `s_i` by `s_{i+1}` (never `s_ℓ` by `s_1`), and each
/// replacement `s_i → s_{i+1}`, `1 ≤ i < ℓ`, happens exactly once.
pub fn verify_sequence_properties(p: &SpeyerParam) -> bool {
    let l = p.roots.len();
    let mut seen = vec![0usize; l];
    for w in p.coordinates.windows(2) {
        let (a, b) = (&w[0].factors, &w[1].factors);
        if a == b {
            continue;
        }
        let removed = multiset_minus(a, b);
        let added = multiset_minus(b, a);
        match (removed.as_slice(), added.as_slice()) {
            ([i], [j]) if j == &(i + 1) => seen[*i - 1] += 1,
            _ => return false,
        }
    }
    seen[..l.saturating_sub(1)].iter().all(|&c| c == 1)
}

fn multiset_minus(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut rest = b.to_vec();
    let mut out = Vec::new();
    for x in a {
        if let Some(pos) = rest.iter().position(|y| y == x) {
            rest.swap_remove(pos);
        } else {
            out.push(*x);
        }
    }
    out
}

/// One ray per root index: the indicator of the coordinates containing it.
pub fn tropicalize_param(p: &SpeyerParam) -> Result<TropicalCurveFan> {
    let rays = (1..=p.roots.len())
        .map(|k| Ray {
            vec: p.coordinates.iter().map(|c| c.factors.iter().filter(|&&x| x == k).count() as i64).collect(),
            mult: 1,
        })
        .collect();
    TropicalCurveFan::new(p.n, rays)
}

/// Builds the piece for a chain of 1-indexed `(start, len)` blocks.
pub fn piece_from_blocks(n: usize, blocks: &[(usize, usize)]) -> Result<CurvePiece> {
    let blocks = blocks
        .iter()
        .map(|&(s, l)| {
            if s == 0 {
                Err(Error::OutOfRange("block starts are 1-indexed".into()))
            } else {
                Interval::new(n, s - 1, l)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let piece = CurvePiece { n, blocks };
    check_chain(&piece)?;
    Ok(piece)
}
