use proptest::prelude::*;
use trophyp::rational::{ratio, Rational};
use trophyp::signvar::*;

fn sign_vec(max: usize) -> impl Strategy<Value = Vec<Sign>> {
    proptest::collection::vec(prop_oneof![Just(Sign::Neg), Just(Sign::Zero), Just(Sign::Pos)], 1..=max)
}

fn rational_vec(max: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((-5i64..=5, 1i64..=4).prop_map(|(p, q)| ratio(p, q)), 1..=max)
}

fn completions(p: &[Sign]) -> Vec<Vec<Sign>> {
    let zeros: Vec<usize> = (0..p.len()).filter(|&i| p[i] == Sign::Zero).collect();
    (0..1usize << zeros.len())
        .map(|mask| {
            let mut q = p.to_vec();
            for (k, &i) in zeros.iter().enumerate() {
                q[i] = if mask >> k & 1 == 1 { Sign::Pos } else { Sign::Neg };
            }
            q
        })
        .collect()
}

#[test]
fn standard_vector() {
    let v: SignPattern = "+00+-".parse().unwrap();
    assert_eq!((var(&v), varbar(&v)), (1, 3));
    let z: SignPattern = "000".parse().unwrap();
    assert_eq!((var(&z), varbar(&z)), (0, 2));
}

#[test]
fn sign_chooser_bound_is_exhaustive_for_small_n() {
    for n in 1..=7usize {
        for mask in 1u32..1 << n {
            let support: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let k = support.len();
            let signs = sign_chooser(&support, n).unwrap();
            // Fill the complement with every sign in {−, 0, +}.
            let free: Vec<usize> = (1..=n).filter(|i| !support.contains(i)).collect();
            for idx in 0..3usize.pow(free.len() as u32) {
                let fill = SignPattern::from_index(idx, free.len());
                let mut z = vec![Sign::Zero; n];
                for (s, &i) in signs.iter().zip(&support) {
                    z[i - 1] = *s;
                }
                for (s, &i) in fill.0.iter().zip(&free) {
                    z[i - 1] = *s;
                }
                assert!(varbar(&z) <= n - k, "support {support:?}, z {z:?}");
            }
        }
    }
}

proptest! {
    #[test]
    fn varbar_is_best_completion(p in sign_vec(10)) {
        let best = completions(&p).iter().map(|q| var(q.as_slice())).max().unwrap();
        prop_assert_eq!(varbar(&p), best);
    }

    #[test]
    fn bounds(p in sign_vec(12)) {
        prop_assert!(var(&p) <= varbar(&p));
        prop_assert!(varbar(&p) < p.len());
    }

    #[test]
    fn depends_only_on_signs(v in rational_vec(9)) {
        let s = SignPattern::of(&v);
        prop_assert_eq!(var(&v), var(&s));
        prop_assert_eq!(varbar(&v), varbar(&s));
    }

    #[test]
    fn reversal_and_negation(v in rational_vec(9)) {
        let rev: Vec<Rational> = v.iter().rev().cloned().collect();
        let neg: Vec<Rational> = v.iter().map(|x| -x).collect();
        prop_assert_eq!(var(&rev), var(&v));
        prop_assert_eq!(varbar(&rev), varbar(&v));
        prop_assert_eq!(var(&neg), var(&v));
        prop_assert_eq!(varbar(&neg), varbar(&v));
    }

    #[test]
    fn pattern_index_round_trip(idx in 0usize..3usize.pow(7)) {
        prop_assert_eq!(SignPattern::from_index(idx, 7).index(), idx);
    }

    #[test]
    fn subspace_membership_thresholds(v in rational_vec(7), c in 1usize..=7) {
        prop_assume!(c <= v.len() && v.iter().any(|x| *x != ratio(0, 1)));
        let pos = exists_positive_subspace_containing(&v, c).unwrap();
        let nonneg = exists_nonnegative_subspace_containing(&v, c).unwrap();
        prop_assert!(!pos || nonneg);
    }
}
