//! Sign patterns and sign-variation counts.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn from_i8(x: i8) -> Sign {
        match x.signum() {
            0 => Sign::Zero,
            1 => Sign::Pos,
            _ => Sign::Neg,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Neg => -1,
            Sign::Zero => 0,
            Sign::Pos => 1,
        }
    }

    pub fn flip(self) -> Sign {
        Sign::from_i8(-self.value())
    }

    pub fn times(self, other: Sign) -> Sign {
        Sign::from_i8(self.value() * other.value())
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Zero => '0',
            Sign::Pos => '+',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Neg),
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Pos),
            _ => None,
        }
    }
}

/// A ternary sign word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignPattern(pub Vec<Sign>);

impl SignPattern {
    pub fn of(v: &[Rational]) -> SignPattern {
        SignPattern(v.iter().map(Sign::of).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|s| *s == Sign::Zero)
    }

    /// The pattern with base-3 index `idx` (digit 0 = `-`, 1 = `0`, 2 = `+`,
    /// least significant digit first). Indices run over `0..3^n`.
    pub fn from_index(mut idx: usize, n: usize) -> SignPattern {
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push(match idx % 3 {
                0 => Sign::Neg,
                1 => Sign::Zero,
                _ => Sign::Pos,
            });
            idx /= 3;
        }
        SignPattern(v)
    }

    pub fn index(&self) -> usize {
        self.0.iter().rev().fold(0, |acc, s| acc * 3 + (s.value() + 1) as usize)
    }

    /// Every nonzero pattern of length `n`, in index order.
    pub fn all_nonzero(n: usize) -> impl Iterator<Item = SignPattern> {
        let zero = SignPattern(vec![Sign::Zero; n]).index();
        (0..3usize.pow(n as u32)).filter(move |&i| i != zero).map(move |i| SignPattern::from_index(i, n))
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

impl std::str::FromStr for SignPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<SignPattern> {
        s.chars()
            .map(|c| Sign::from_symbol(c).ok_or_else(|| Error::OutOfRange(format!("sign symbol `{c}`"))))
            .collect::<Result<Vec<_>>>()
            .map(SignPattern)
    }
}

/// Anything that can be read as a sequence of signs.
pub trait Signs {
    fn signs(&self) -> Vec<Sign>;
}

impl Signs for [Sign] {
    fn signs(&self) -> Vec<Sign> {
        self.to_vec()
    }
}

impl Signs for Vec<Sign> {
    fn signs(&self) -> Vec<Sign> {
        self.clone()
    }
}

impl Signs for SignPattern {
    fn signs(&self) -> Vec<Sign> {
        self.0.clone()
    }
}

impl Signs for [Rational] {
    fn signs(&self) -> Vec<Sign> {
        self.iter().map(Sign::of).collect()
    }
}

impl Signs for Vec<Rational> {
    fn signs(&self) -> Vec<Sign> {
        self.as_slice().signs()
    }
}

fn var_slice(s: &[Sign]) -> usize {
    let mut last = Sign::Zero;
    let mut count = 0;
    for &x in s {
        if x == Sign::Zero {
            continue;
        }
        if last != Sign::Zero && x != last {
            count += 1;
        }
        last = x;
    }
    count
}

fn varbar_slice(s: &[Sign]) -> usize {
    // best[0]: last assigned sign negative, best[1]: positive.
    let mut best: [Option<usize>; 2] = [None, None];
    for &x in s {
        let choices: &[usize] = match x {
            Sign::Neg => &[0],
            Sign::Pos => &[1],
            Sign::Zero => &[0, 1],
        };
        let mut next = [None, None];
        for &t in choices {
            let stay = best[t];
            let switch = best[1 - t].map(|b| b + 1);
            next[t] = match (stay, switch) {
                (None, None) => Some(0),
                (a, b) => a.max(b),
            };
        }
        best = next;
    }
    best[0].max(best[1]).unwrap_or(0)
}

/// Sign changes after discarding zeros.
pub fn var<S: Signs + ?Sized>(v: &S) -> usize {
    var_slice(&v.signs())
}

/// Sign changes when zeros are assigned signs that maximize the count.
pub fn varbar<S: Signs + ?Sized>(v: &S) -> usize {
    varbar_slice(&v.signs())
}

fn check_membership_args(v: &[Rational], c: usize) -> Result<()> {
    if v.is_empty() {
        return Err(Error::Empty("vector"));
    }
    if v.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroVector);
    }
    if c == 0 || c > v.len() {
        return Err(Error::OutOfRange(format!("c = {c} must lie in 1..={}", v.len())));
    }
    Ok(())
}

/// Whether some subspace in the positive Grassmannian `Gr_+(c, n)` contains `v`.
pub fn exists_positive_subspace_containing(v: &[Rational], c: usize) -> Result<bool> {
    check_membership_args(v, c)?;
    Ok(varbar(v) < c)
}

/// Whether some subspace in the nonnegative Grassmannian `Gr_≥0(c, n)` contains `v`.
pub fn exists_nonnegative_subspace_containing(v: &[Rational], c: usize) -> Result<bool> {
    check_membership_args(v, c)?;
    Ok(var(v) < c)
}

/// Signs on a support `i_1 < … < i_k` (1-indexed) such that every vector
/// carrying them there has `varbar ≤ n − k`: start with `+` and flip exactly
/// across even gaps.
pub fn sign_chooser(support: &[usize], n: usize) -> Result<Vec<Sign>> {
    if support.is_empty() {
        return Err(Error::Empty("support"));
    }
    if support.len() > n {
        return Err(Error::OutOfRange(format!("support of size {} in [{n}]", support.len())));
    }
    for w in support.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::InvalidSubset("support must be strictly increasing".into()));
        }
    }
    if support[0] == 0 || *support.last().unwrap() > n {
        return Err(Error::InvalidSubset(format!("support must lie in 1..={n}")));
    }
    let mut out = vec![Sign::Pos];
    for w in support.windows(2) {
        let prev = *out.last().unwrap();
        out.push(if (w[1] - w[0]) % 2 == 0 { prev.flip() } else { prev });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn small_values() {
        assert_eq!(var(&v(&[1, 0, 0, 1, -1])), 1);
        assert_eq!(varbar(&v(&[1, 0, 0, 1, -1])), 3);
        assert_eq!(var(&v(&[1, 1, 1])), 0);
        assert_eq!(var(&v(&[1, -1, 1, -1])), 3);
        assert_eq!(varbar(&v(&[1, -1])), 1);
        assert_eq!(varbar(&v(&[0, 0, 0])), 2);
        assert_eq!(var(&v(&[0, 0, 0])), 0);
    }

    #[test]
    fn membership() {
        let x = v(&[1, 0, 0, 1, -1]);
        assert!(exists_positive_subspace_containing(&v(&[1, 1, 1]), 1).unwrap());
        assert!(!exists_positive_subspace_containing(&x, 3).unwrap());
        assert!(exists_positive_subspace_containing(&x, 4).unwrap());
        assert!(exists_nonnegative_subspace_containing(&x, 2).unwrap());
        assert!(!exists_nonnegative_subspace_containing(&v(&[1, -1, 1]), 1).unwrap());
        assert!(exists_nonnegative_subspace_containing(&v(&[5, 0, 3]), 1).unwrap());
        assert_eq!(exists_positive_subspace_containing(&v(&[0, 0]), 1), Err(Error::ZeroVector));
        assert!(exists_positive_subspace_containing(&x, 6).is_err());
        assert!(exists_positive_subspace_containing(&x, 0).is_err());
    }

    #[test]
    fn chooser_examples() {
        use Sign::*;
        assert_eq!(sign_chooser(&[1, 2, 4, 7], 7).unwrap(), vec![Pos, Pos, Neg, Neg]);
        assert_eq!(sign_chooser(&[1, 2, 3], 3).unwrap(), vec![Pos, Pos, Pos]);
        assert_eq!(sign_chooser(&[1, 3, 5], 5).unwrap(), vec![Pos, Neg, Pos]);
        assert!(sign_chooser(&[], 3).is_err());
        assert!(sign_chooser(&[2, 2], 3).is_err());
        assert!(sign_chooser(&[4], 3).is_err());
    }

    #[test]
    fn pattern_index_round_trip() {
        for i in 0..243 {
            assert_eq!(SignPattern::from_index(i, 5).index(), i);
        }
        assert_eq!(SignPattern::all_nonzero(3).count(), 26);
        let p: SignPattern = "+0-".parse().unwrap();
        assert_eq!(p.to_string(), "+0-");
    }
}
