use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{serde_rational, ComplexRational, Rational};

pub type Exponent = Vec<u32>;

/// Polynomial with complex-rational coefficients. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolynomial {
    n: usize,
    terms: BTreeMap<Exponent, ComplexRational>,
}

impl LatticePolynomial {
    pub fn new(n: usize, terms: impl IntoIterator<Item = (Exponent, ComplexRational)>) -> Result<Self> {
        let mut map: BTreeMap<Exponent, ComplexRational> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::Dimension(format!("exponent of length {} in {n} variables", e.len())));
            }
            let slot = map.entry(e).or_insert_with(ComplexRational::zero);
            *slot = &*slot + &c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(LatticePolynomial { n, terms: map })
    }

    /// Real polynomial from `(exponent, coefficient)` pairs.
    pub fn real(n: usize, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Result<Self> {
        Self::new(n, terms.into_iter().map(|(e, c)| (e, ComplexRational::real(c))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, ComplexRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }

    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as i64).collect()).collect()
    }

    pub fn eval(&self, x: &[ComplexRational]) -> ComplexRational {
        self.terms.iter().fold(ComplexRational::zero(), |acc, (e, c)| {
            let mono = e.iter().zip(x).fold(ComplexRational::one(), |m, (&k, xi)| &m * &xi.pow(k));
            &acc + &(c * &mono)
        })
    }
}

impl fmt::Display for LatticePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{p}", i + 1) })
                .collect();
            let coeff = if c.is_real() { c.re.to_string() } else { format!("({c})") };
            match (mono.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{coeff}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{coeff}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Coefficient of a polynomial over a valued field, kept only through its
/// valuation and the leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuedCoefficient {
    pub val: Rational,
    pub lead: ComplexRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuedPolynomial {
    n: usize,
    terms: BTreeMap<Exponent, ValuedCoefficient>,
}

impl ValuedPolynomial {
    pub fn new(n: usize, terms: impl IntoIterator<Item = (Exponent, Rational, ComplexRational)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (e, val, lead) in terms {
            if e.len() != n {
                return Err(Error::Dimension(format!("exponent of length {} in {n} variables", e.len())));
            }
            if lead.is_zero() {
                return Err(Error::OutOfRange("leading coefficients must be nonzero".into()));
            }
            if map.insert(e.clone(), ValuedCoefficient { val, lead }).is_some() {
                return Err(Error::OutOfRange(format!("exponent {e:?} repeated")));
            }
        }
        if map.is_empty() {
            return Err(Error::Empty("polynomial"));
        }
        Ok(ValuedPolynomial { n, terms: map })
    }

    /// Every coefficient gets valuation zero.
    pub fn constant(f: &LatticePolynomial) -> Result<Self> {
        Self::new(f.n, f.terms.iter().map(|(e, c)| (e.clone(), Rational::zero(), c.clone())))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, ValuedCoefficient> {
        &self.terms
    }

    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as i64).collect()).collect()
    }

    /// The underlying constant-coefficient polynomial; every valuation must
    /// be zero.
    pub fn to_constant(&self) -> Result<LatticePolynomial> {
        if self.terms.values().any(|c| !c.val.is_zero()) {
            return Err(Error::OutOfRange("polynomial has nonzero valuations".into()));
        }
        LatticePolynomial::new(self.n, self.terms.iter().map(|(e, c)| (e.clone(), c.lead.clone())))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    #[serde(with = "serde_rational", default = "Rational::zero")]
    val: Rational,
    #[serde(with = "serde_rational")]
    re: Rational,
    #[serde(with = "serde_rational", default = "Rational::zero")]
    im: Rational,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for ValuedPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exp: e.clone(),
                    val: c.val.clone(),
                    re: c.lead.re.clone(),
                    im: c.lead.im.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ValuedPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        ValuedPolynomial::new(j.n, j.terms.into_iter().map(|t| (t.exp, t.val, ComplexRational::new(t.re, t.im))))
            .map_err(serde::de::Error::custom)
    }
}

impl Serialize for LatticePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson { exp: e.clone(), val: Rational::zero(), re: c.re.clone(), im: c.im.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

/// Finite set of integer points, sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PointsJson")]
pub struct LatticePointSet {
    pub n: usize,
    pub points: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct PointsJson {
    n: usize,
    points: Vec<Vec<i64>>,
}

impl TryFrom<PointsJson> for LatticePointSet {
    type Error = Error;

    fn try_from(j: PointsJson) -> Result<Self> {
        LatticePointSet::new(j.n, j.points)
    }
}

impl LatticePointSet {
    pub fn new(n: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Empty("point set"));
        }
        if let Some(p) = points.iter().find(|p| p.len() != n) {
            return Err(Error::Dimension(format!("point {p:?} in dimension {n}")));
        }
        let mut points = points;
        points.sort();
        points.dedup();
        Ok(LatticePointSet { n, points })
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points.binary_search_by(|q| q.as_slice().cmp(p)).is_ok()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The common coordinate sum, if every point has the same one.
    pub fn degree(&self) -> Option<i64> {
        let d: i64 = self.points[0].iter().sum();
        self.points.iter().all(|p| p.iter().sum::<i64>() == d).then_some(d)
    }
}
