//! Exact rationals and complex rationals, with the canonical `p/q` text form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p`, `p/q` or `-p/q`. Zero denominators are rejected rather than
/// panicking.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let t = s.trim();
    let bad = || Error::ParseRational(s.to_string());
    match t.split_once('/') {
        None => BigInt::from_str(t).map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Canonical text form: reduced, sign on the numerator, integers without `/1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_vector(s: &str) -> Result<Vec<Rational>, Error> {
    s.split(',').map(parse_rational).collect()
}

/// Nearest `f64`, for display only.
pub fn to_f64(r: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

pub fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Serde adapter for `Rational` as a canonical string. Also accepts JSON
/// integers on input.
pub mod serde_rational {
    use super::*;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Text(String),
        Int(i64),
    }

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Text(t) => parse_rational(&t).map_err(serde::de::Error::custom),
            Repr::Int(i) => Ok(int(i)),
        }
    }
}

/// Serde adapter for `Vec<Rational>`.
pub mod serde_rational_vec {
    use super::*;

    #[derive(Serialize, Deserialize)]
    #[serde(transparent)]
    struct Wrap(#[serde(with = "serde_rational")] Rational);

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let w: Vec<Wrap> = v.iter().cloned().map(Wrap).collect();
        w.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let w: Vec<Wrap> = Vec::deserialize(d)?;
        Ok(w.into_iter().map(|x| x.0).collect())
    }
}

/// Serde adapter for `Vec<Vec<Rational>>`.
pub mod serde_rational_mat {
    use super::*;

    #[derive(Serialize, Deserialize)]
    #[serde(transparent)]
    struct Row(#[serde(with = "serde_rational_vec")] Vec<Rational>);

    pub fn serialize<S: Serializer>(v: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let w: Vec<Row> = v.iter().cloned().map(Row).collect();
        w.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let w: Vec<Row> = Vec::deserialize(d)?;
        Ok(w.into_iter().map(|x| x.0).collect())
    }
}

/// `re + i·im` with exact rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ComplexRational {
    #[serde(with = "serde_rational")]
    pub re: Rational,
    #[serde(with = "serde_rational")]
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        ComplexRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        ComplexRational { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        ComplexRational::new(Rational::zero(), Rational::one())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ComplexRational::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(ComplexRational::new(&self.re / &n, -&self.im / &n))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|o| self * &o)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = ComplexRational::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Zero for ComplexRational {
    fn zero() -> Self {
        ComplexRational::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for ComplexRational {
    fn one() -> Self {
        ComplexRational::real(Rational::one())
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl<'a> Add<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn add(self, o: &ComplexRational) -> ComplexRational {
        ComplexRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Add for ComplexRational {
    type Output = ComplexRational;
    fn add(self, o: ComplexRational) -> ComplexRational {
        &self + &o
    }
}

impl<'a> Sub<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn sub(self, o: &ComplexRational) -> ComplexRational {
        ComplexRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Sub for ComplexRational {
    type Output = ComplexRational;
    fn sub(self, o: ComplexRational) -> ComplexRational {
        &self - &o
    }
}

impl<'a> Mul<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn mul(self, o: &ComplexRational) -> ComplexRational {
        ComplexRational::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

impl Mul for ComplexRational {
    type Output = ComplexRational;
    fn mul(self, o: ComplexRational) -> ComplexRational {
        &self * &o
    }
}

impl Neg for ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational::new(-self.re, -self.im)
    }
}

impl Neg for &ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational::new(-self.re.clone(), -self.im.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "3", "-7", "1/2", "-5/3"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn complex_field_ops() {
        let a = ComplexRational::new(ratio(1, 2), int(3));
        let b = ComplexRational::new(int(-2), ratio(1, 3));
        let q = a.div(&b).unwrap();
        assert_eq!(&q * &b, a);
        assert_eq!(&ComplexRational::i() * &ComplexRational::i(), -ComplexRational::one());
        assert!(ComplexRational::zero().inv().is_none());
        assert_eq!(a.pow(3), &(&a * &a) * &a);
    }
}
