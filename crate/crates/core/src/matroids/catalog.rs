//! Every matroid on a labeled ground set of at most six elements.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::matroids::matroid::Matroid;
use crate::matroids::subset::Subset;
use crate::par::{self, Strategy};

pub const MAX_CATALOG: usize = 6;

/// Basis-exchange check on a family encoded as a 64-bit set of subsets of a
/// ground set with at most six elements.
fn satisfies_exchange(family: &[u16], member: u64) -> bool {
    let has = |s: u16| member & (1u64 << s) != 0;
    for &b1 in family {
        for &b2 in family {
            let mut out = b1 & !b2;
            let into = b2 & !b1;
            while out != 0 {
                let e = out & out.wrapping_neg();
                out &= out - 1;
                let base = b1 & !e;
                let mut cand = into;
                let mut ok = false;
                while cand != 0 {
                    let f = cand & cand.wrapping_neg();
                    cand &= cand - 1;
                    if has(base | f) {
                        ok = true;
                        break;
                    }
                }
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// All matroids of rank `d` on `{0, …, n−1}`, sorted by basis family.
pub fn matroids_of_rank(n: usize, d: usize, strategy: Strategy) -> Result<Vec<Matroid>> {
    if n > MAX_CATALOG {
        return Err(Error::TooLarge(n, MAX_CATALOG));
    }
    if d > n {
        return Err(Error::OutOfRange(format!("rank {d} on {n} elements")));
    }
    let subsets: Vec<u16> = (0..n).combinations(d).map(|c| c.iter().fold(0u16, |acc, &i| acc | (1 << i))).collect();
    let k = subsets.len();
    let families = par::filter_map_range(strategy, 1..1usize << k, |mask| {
        let family: Vec<u16> = (0..k).filter(|&j| mask & (1 << j) != 0).map(|j| subsets[j]).collect();
        let member = family.iter().fold(0u64, |acc, &s| acc | (1u64 << s));
        satisfies_exchange(&family, member).then_some(family)
    });
    let mut out: Vec<Matroid> =
        families.into_iter().map(|f| Matroid::from_trusted(n, d, f.into_iter().map(Subset).collect())).collect();
    out.sort_by(|a, b| a.bases().cmp(b.bases()));
    Ok(out)
}

/// All matroids on `{0, …, n−1}`, by rank then basis family.
pub fn catalog(n: usize, strategy: Strategy) -> Result<Vec<Matroid>> {
    let mut out = Vec::new();
    for d in 0..=n {
        out.extend(matroids_of_rank(n, d, strategy)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| catalog(n, Strategy::Sequential).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16, 68]);
        assert!(catalog(7, Strategy::Sequential).is_err());
    }
}
