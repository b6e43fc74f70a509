use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactlin::matrix::ExactMatrix;
use crate::exactlin::pluecker::{maximal_minors, GrassmannClass};
use crate::rational::{serde_rational_mat, ComplexRational, Rational};

/// `re + i·im`, entrywise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMatrix {
    pub re: ExactMatrix,
    pub im: ExactMatrix,
}

impl ComplexMatrix {
    pub fn new(re: ExactMatrix, im: ExactMatrix) -> Result<Self> {
        if re.nrows() != im.nrows() || re.ncols() != im.ncols() {
            return Err(Error::Dimension("real and imaginary parts differ in shape".into()));
        }
        Ok(ComplexMatrix { re, im })
    }

    pub fn from_real(re: ExactMatrix) -> Self {
        let im = ExactMatrix::zeros(re.nrows(), re.ncols());
        ComplexMatrix { re, im }
    }

    pub fn nrows(&self) -> usize {
        self.re.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.re.ncols()
    }

    pub fn entry(&self, i: usize, j: usize) -> ComplexRational {
        ComplexRational::new(self.re.get(i, j).clone(), self.im.get(i, j).clone())
    }

    /// Rank over `Q(i)` by Gaussian elimination.
    #[allow(clippy::needless_range_loop)] // rows i and k are borrowed together
    pub fn rank(&self) -> usize {
        let (m, n) = (self.nrows(), self.ncols());
        let mut a: Vec<Vec<ComplexRational>> = (0..m).map(|i| (0..n).map(|j| self.entry(i, j)).collect()).collect();
        let mut k = 0;
        for col in 0..n {
            if k == m {
                break;
            }
            let Some(p) = (k..m).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(p, k);
            let inv = a[k][col].inv().expect("nonzero pivot");
            for i in k + 1..m {
                if a[i][col].is_zero() {
                    continue;
                }
                let f = &a[i][col] * &inv;
                for j in col..n {
                    let sub = &f * &a[k][j];
                    a[i][j] = &a[i][j] - &sub;
                }
            }
            k += 1;
        }
        k
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    rows: usize,
    cols: usize,
    #[serde(with = "serde_rational_mat")]
    re: Vec<Vec<Rational>>,
    #[serde(with = "serde_rational_mat")]
    im: Vec<Vec<Rational>>,
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexJson { rows: self.nrows(), cols: self.ncols(), re: self.re.to_rows(), im: self.im.to_rows() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = ComplexJson::deserialize(d)?;
        if j.re.len() != j.rows || j.im.len() != j.rows {
            return Err(D::Error::custom(format!("declared {} rows", j.rows)));
        }
        let re = ExactMatrix::from_rows(j.cols, j.re).map_err(D::Error::custom)?;
        let im = ExactMatrix::from_rows(j.cols, j.im).map_err(D::Error::custom)?;
        ComplexMatrix::new(re, im).map_err(D::Error::custom)
    }
}

/// Outcome of the linear positive-hyperbolicity test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LinearCertificate {
    /// Defined over the reals and the real complement is nonnegative. The
    /// complement class is absent when the complement is zero.
    Hyperbolic { real_form: ExactMatrix, complement: ExactMatrix, complement_class: Option<GrassmannClass> },
    /// The row space is not conjugation invariant.
    NotReal { complex_rank: usize, real_rank: usize },
    /// The complement has Plücker coordinates of both signs (0-indexed subsets).
    ComplementNotNonnegative { complement: ExactMatrix, positive_minor: Vec<usize>, negative_minor: Vec<usize> },
}

impl LinearCertificate {
    pub fn is_hyperbolic(&self) -> bool {
        matches!(self, LinearCertificate::Hyperbolic { .. })
    }
}

/// Decides whether the complex row space of `l` is a positively hyperbolic
/// linear space: it must be defined over `R`, with nonnegative real
/// orthogonal complement.
pub fn is_positively_hyperbolic_linear(l: &ComplexMatrix) -> Result<LinearCertificate> {
    let d = l.rank();
    if d != l.nrows() {
        return Err(Error::RankDeficient { rank: d, expected: l.nrows() });
    }
    let stacked = l.re.stack(&l.im)?;
    let (real_form, _) = stacked.rref();
    let real_rank = real_form.nrows();
    if real_rank != d {
        return Ok(LinearCertificate::NotReal { complex_rank: d, real_rank });
    }
    let complement = real_form.kernel();
    if complement.nrows() == 0 {
        return Ok(LinearCertificate::Hyperbolic { real_form, complement, complement_class: None });
    }
    let minors = maximal_minors(&complement)?;
    if let Some((p, q)) = minors.opposite_signs() {
        return Ok(LinearCertificate::ComplementNotNonnegative { complement, positive_minor: p, negative_minor: q });
    }
    let class = minors.class();
    Ok(LinearCertificate::Hyperbolic { real_form, complement, complement_class: Some(class) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::pluecker::orthogonal_complement;

    #[test]
    fn nonnegative_hyperplane() {
        let a = ExactMatrix::from_ints(&[[1, 2, 0, 3]]);
        let h = orthogonal_complement(&a).unwrap();
        let cert = is_positively_hyperbolic_linear(&ComplexMatrix::from_real(h)).unwrap();
        assert!(cert.is_hyperbolic());
    }

    #[test]
    fn non_real_row() {
        let l = ComplexMatrix::new(ExactMatrix::from_ints(&[[1, 0]]), ExactMatrix::from_ints(&[[0, 1]])).unwrap();
        assert_eq!(
            is_positively_hyperbolic_linear(&l).unwrap(),
            LinearCertificate::NotReal { complex_rank: 1, real_rank: 2 }
        );
    }

    #[test]
    fn complex_scaling_is_still_real() {
        // (1+i)·(1,-1,0) and i·(0,1,-1) span a real plane.
        let l = ComplexMatrix::new(
            ExactMatrix::from_ints(&[[1, -1, 0], [0, 0, 0]]),
            ExactMatrix::from_ints(&[[1, -1, 0], [0, 1, -1]]),
        )
        .unwrap();
        match is_positively_hyperbolic_linear(&l).unwrap() {
            LinearCertificate::Hyperbolic { complement, complement_class, .. } => {
                assert_eq!(complement, ExactMatrix::from_ints(&[[1, 1, 1]]));
                assert_eq!(complement_class, Some(GrassmannClass::Positive));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn mixed_complement() {
        let l = ComplexMatrix::from_real(ExactMatrix::from_ints(&[[1, 1, 0]]));
        assert!(matches!(
            is_positively_hyperbolic_linear(&l).unwrap(),
            LinearCertificate::ComplementNotNonnegative { .. }
        ));
    }
}
