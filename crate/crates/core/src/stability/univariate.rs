//! Dense univariate polynomials over `Q` and Sturm root counting.

use num_traits::{One, Signed, Zero};

use crate::rational::{int, Rational};

/// Coefficients in ascending degree, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `a·t + b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let len = self.0.len().max(o.0.len());
        let z = Rational::zero();
        UniPoly::new((0..len).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect())
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::default();
        }
        let mut out = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        (0..e).fold(UniPoly::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * int(i as i64)).collect())
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.lead().unwrap().clone();
        let mut r = self.0.clone();
        let mut q = vec![Rational::zero(); self.0.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() / &lead;
            for (i, di) in d.0.iter().enumerate() {
                r[k + i] -= &c * di;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn monic(&self) -> UniPoly {
        match self.lead() {
            Some(l) => self.scale(&l.recip()),
            None => self.clone(),
        }
    }

    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same roots, all simple.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// Sign of `p(t)` as `t → +∞` (or `−∞`).
    fn sign_at_infinity(&self, positive: bool) -> i8 {
        match (self.lead(), self.degree()) {
            (None, _) => 0,
            (Some(l), Some(d)) => {
                let s: i8 = if l.is_positive() { 1 } else { -1 };
                if positive || d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn sturm_sequence(&self) -> Vec<UniPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let k = seq.len();
            if seq[k - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[k - 2].divrem(&seq[k - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(r.scale(&-Rational::one()));
        }
        seq
    }

    /// Number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let seq = self.sturm_sequence();
        let changes = |positive: bool| {
            let signs: Vec<i8> = seq.iter().map(|p| p.sign_at_infinity(positive)).filter(|s| *s != 0).collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        changes(false) - changes(true)
    }
}
