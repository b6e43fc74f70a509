use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, serde_rational_mat, Rational};

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            data.extend(row);
        }
        Ok(ExactMatrix { rows: r, cols, data })
    }

    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let rows = rows.iter().map(|r| r.as_ref().iter().map(|&x| int(x)).collect()).collect();
        Self::from_rows(cols, rows).expect("ragged integer matrix")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// `v ↦ vᵀ M`, i.e. the row-space point with coordinates `y`.
    pub fn combine_rows(&self, y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.cols];
        for (i, yi) in y.iter().enumerate().take(self.rows) {
            if yi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o += yi * self.get(i, j);
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                m.set(i, k, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let data = rows.iter().flat_map(|&i| self.row(i).iter().cloned()).collect();
        ExactMatrix { rows: rows.len(), cols: self.cols, data }
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &ExactMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Dimension("stacked matrices must share a column count".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(ExactMatrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Rows scaled by the lcm of their denominators, as integers. Row scaling
    /// changes neither rank nor the row space.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let l = self.row(i).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                scale *= &l;
                self.row(i).iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect();
        (rows, scale)
    }

    /// Fraction-free (Bareiss) row echelon form of the integer-scaled rows.
    /// Returns the rank and, for square inputs, the determinant.
    fn bareiss(&self) -> (usize, Option<Rational>) {
        let (mut a, scale) = self.integer_rows();
        let (m, n) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut k = 0;
        let mut negate = false;
        for col in 0..n {
            if k == m {
                break;
            }
            let Some(p) = (k..m).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..m {
                for j in col + 1..n {
                    let v = &a[i][j] * &a[k][col] - &a[i][col] * &a[k][j];
                    debug_assert!((&v % &prev).is_zero(), "inexact Bareiss step");
                    a[i][j] = v / &prev;
                }
                a[i][col] = BigInt::zero();
            }
            prev = a[k][col].clone();
            k += 1;
        }
        let det = (m == n).then(|| {
            if k < n {
                Rational::zero()
            } else {
                let d = if negate { -prev } else { prev };
                Rational::new(d, scale)
            }
        });
        (k, det)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().0
    }

    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        if self.rows == 0 {
            return Ok(Rational::one());
        }
        Ok(self.bareiss().1.expect("square"))
    }

    /// Determinant of the maximal square submatrix on the given columns.
    pub fn minor(&self, cols: &[usize]) -> Rational {
        self.select_columns(cols).det().expect("square selection")
    }

    /// Reduced row echelon form with zero rows dropped, plus pivot columns.
    #[allow(clippy::needless_range_loop)]
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut a = self.to_rows();
        let (m, n) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut k = 0;
        for col in 0..n {
            if k == m {
                break;
            }
            let Some(p) = (k..m).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(p, k);
            let inv = a[k][col].recip();
            for x in a[k].iter_mut() {
                *x *= &inv;
            }
            for i in 0..m {
                if i != k && !a[i][col].is_zero() {
                    let f = a[i][col].clone();
                    for j in 0..n {
                        let sub = &f * &a[k][j];
                        a[i][j] -= sub;
                    }
                }
            }
            pivots.push(col);
            k += 1;
        }
        a.truncate(k);
        (ExactMatrix::from_rows(n, a).expect("shape"), pivots)
    }

    /// Basis of `{x : M x = 0}`, one row per free column, each scaled to a
    /// primitive integer vector whose first nonzero entry is positive.
    pub fn kernel(&self) -> ExactMatrix {
        let (r, pivots) = self.rref();
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
        let rows = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); n];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f).clone();
                }
                primitive(&v)
            })
            .collect();
        ExactMatrix::from_rows(n, rows).expect("shape")
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }
}

/// Scales a nonzero rational vector to a primitive integer vector with
/// positive first nonzero entry. The zero vector is returned unchanged.
pub fn primitive(v: &[Rational]) -> Vec<Rational> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    let lead_neg = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    ints.into_iter()
        .map(|x| {
            let y = x / &g;
            Rational::from_integer(if lead_neg { -y } else { y })
        })
        .collect()
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix{}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            write!(f, "{}[{}]", if i > 0 { ", " } else { "" }, row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    #[serde(with = "serde_rational_mat")]
    entries: Vec<Vec<Rational>>,
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson { rows: self.rows, cols: self.cols, entries: self.to_rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MatrixJson::deserialize(d)?;
        if j.entries.len() != j.rows {
            return Err(serde::de::Error::custom(format!("declared {} rows but found {}", j.rows, j.entries.len())));
        }
        ExactMatrix::from_rows(j.cols, j.entries).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn cofactor_det(m: &ExactMatrix) -> Rational {
        let n = m.nrows();
        if n == 0 {
            return Rational::one();
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            let rest: Vec<usize> = (0..n).filter(|&k| k != j).collect();
            let sub = m.select_rows(&(1..n).collect::<Vec<_>>()).select_columns(&rest);
            let term = m.get(0, j) * cofactor_det(&sub);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let m = ExactMatrix::from_rows(
            3,
            vec![
                vec![ratio(1, 2), int(3), int(-1)],
                vec![int(0), ratio(-2, 3), int(4)],
                vec![int(5), int(1), ratio(7, 5)],
            ],
        )
        .unwrap();
        assert_eq!(m.det().unwrap(), cofactor_det(&m));
        let sing = ExactMatrix::from_ints(&[[1, 2, 3], [2, 4, 6], [0, 1, 1]]);
        assert_eq!(sing.det().unwrap(), Rational::zero());
        assert_eq!(sing.rank(), 2);
        let swapped = ExactMatrix::from_ints(&[[0, 1], [1, 0]]);
        assert_eq!(swapped.det().unwrap(), int(-1));
    }

    #[test]
    fn rank_with_skipped_columns() {
        let m = ExactMatrix::from_ints(&[[0, 1, 2, 0], [0, 2, 4, 1], [0, 0, 0, 3]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rref().1, vec![1, 3]);
    }

    #[test]
    fn kernel_examples() {
        let k = ExactMatrix::from_ints(&[[1, 1]]).kernel();
        assert_eq!(k, ExactMatrix::from_ints(&[[1, -1]]));
        assert_eq!(ExactMatrix::identity(2).kernel().nrows(), 0);
        let m = ExactMatrix::from_ints(&[[1, 0, -1], [0, 1, 2]]);
        let k = m.kernel();
        assert!(m.mul(&k.transpose()).unwrap().is_zero());
        assert_eq!(k.nrows(), 1);
    }

    #[test]
    fn json_round_trip() {
        let m = ExactMatrix::from_rows(2, vec![vec![ratio(1, 2), int(-3)], vec![int(0), ratio(-5, 7)]]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"rows":2,"cols":2,"entries":[["1/2","-3"],["0","-5/7"]]}"#);
        let back: ExactMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        let ints: ExactMatrix = serde_json::from_str(r#"{"rows":1,"cols":2,"entries":[[1,-2]]}"#).unwrap();
        assert_eq!(ints, ExactMatrix::from_ints(&[[1, -2]]));
        assert!(serde_json::from_str::<ExactMatrix>(r#"{"rows":2,"cols":2,"entries":[[1,2]]}"#).is_err());
    }
}
