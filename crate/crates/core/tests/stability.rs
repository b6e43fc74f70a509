use std::collections::BTreeMap;
use std::sync::LazyLock;

use proptest::prelude::*;
use trophyp::matroids::{catalog, Matroid};
use trophyp::par::Strategy as Exec;
use trophyp::rational::{int, ratio, Rational};
use trophyp::stability::*;
use trophyp::ComplexRational;

static CATALOG4: LazyLock<Vec<Matroid>> = LazyLock::new(|| catalog(4, Exec::Parallel).unwrap());

fn degree_two_points(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut p = vec![0; n];
            p[i] += 1;
            p[j] += 1;
            out.push(p);
        }
    }
    out
}

fn valued_poly() -> impl Strategy<Value = ValuedPolynomial> {
    proptest::collection::btree_map(
        proptest::collection::vec(0u32..=2, 3),
        ((-2i64..=2, 1i64..=2), prop_oneof![-3i64..=-1, 1i64..=3]),
        1..=6,
    )
    .prop_map(|terms| {
        ValuedPolynomial::new(
            3,
            terms.into_iter().map(|(e, ((p, q), c))| (e, ratio(p, q), ComplexRational::real(int(c)))),
        )
        .unwrap()
    })
}

fn weight(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((-3i64..=3, 1i64..=3).prop_map(|(p, q)| ratio(p, q)), n)
}

fn product(n: usize, forms: &[Vec<i64>]) -> LatticePolynomial {
    let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::from([(vec![0; n], 1)]);
    for form in forms {
        let mut next = BTreeMap::new();
        for (e, c) in &acc {
            for (i, &a) in form.iter().enumerate().filter(|(_, a)| **a != 0) {
                let mut e = e.clone();
                e[i] += 1;
                *next.entry(e).or_insert(0) += c * a;
            }
        }
        acc = next;
    }
    LatticePolynomial::real(n, acc.into_iter().map(|(e, c)| (e, int(c)))).unwrap()
}

#[test]
fn real_rootedness_on_lines() {
    // x1·x2 − 1 restricted to (1,1) + t(1,−1): 1 − t² − 1 = −t², real-rooted.
    let f = LatticePolynomial::real(2, [(vec![1, 1], int(1)), (vec![0, 0], int(-1))]).unwrap();
    assert!(real_rooted_on_line(&f, &[int(1), int(1)], &[int(1), int(-1)]).unwrap());
    // x1² + x2² is never stable.
    let g = LatticePolynomial::real(2, [(vec![2, 0], int(1)), (vec![0, 2], int(1))]).unwrap();
    assert!(falsify_stability(&g, 100, 0).unwrap().is_falsified());
}

#[test]
fn catalog_basis_polytopes_are_generalized_permutohedra() {
    for n in 1..=5 {
        for m in catalog(n, Exec::Parallel).unwrap() {
            let s = LatticePointSet::new(n, m.bases().iter().map(|b| b.indicator(n)).collect()).unwrap();
            assert!(is_generalized_permutohedron(&vertices(&s)), "{m:?}");
            assert!(polytope_edges(&s).iter().all(|e| is_root_direction(&e.direction)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn exchange_agrees_with_hull(mask in 1u32..1 << 10) {
        let pts = degree_two_points(4);
        let s = LatticePointSet::new(4, (0..10).filter(|i| mask >> i & 1 == 1).map(|i| pts[i].clone()).collect()).unwrap();
        prop_assert_eq!(is_m_convex_set(&s).unwrap(), is_m_convex_set_by_hull(&s).unwrap());
        prop_assert_eq!(is_m_convex_set(&s).unwrap(), exchange_failure(&s).is_none());
    }

    #[test]
    fn initial_form_is_idempotent(f in valued_poly(), w in weight(3)) {
        let g = tinit(&f, &w).unwrap();
        let again = tinit(&ValuedPolynomial::constant(&g).unwrap(), &[int(0), int(0), int(0)]).unwrap();
        prop_assert_eq!(&again, &g);
        prop_assert_eq!(in_tropical_hypersurface(&f, &w).unwrap(), g.terms().len() >= 2);
        prop_assert!(g.terms().keys().all(|e| f.terms().contains_key(e)));
    }

    #[test]
    fn m_convex_functions_have_m_convex_initial_supports(
        idx in 0usize..1000,
        vals in proptest::collection::vec(-2i64..=2, 6),
        w in weight(4),
    ) {
        let m = &CATALOG4[idx % CATALOG4.len()];
        let f = ValuedPolynomial::new(
            4,
            m.bases().iter().zip(&vals).map(|(b, &v)| {
                (b.indicator(4).into_iter().map(|x| x as u32).collect(), int(v), ComplexRational::real(int(1)))
            }),
        )
        .unwrap();
        let verdict = is_m_convex_function(&f).unwrap();
        prop_assert_eq!(verdict.holds, verdict.failing_cell.is_none());
        if verdict.holds {
            let g = tinit(&f, &w).unwrap();
            let s = LatticePointSet::new(4, g.support()).unwrap();
            prop_assert!(is_m_convex_set(&s).unwrap(), "{:?} at {:?}", f, w);
        }
    }

    #[test]
    fn stable_binomials_survive_sampling(
        alpha in proptest::collection::vec(0u32..=2, 3),
        beta in proptest::collection::vec(0u32..=2, 3),
        a in prop_oneof![-2i64..=-1, 1i64..=2],
        b in prop_oneof![-2i64..=-1, 1i64..=2],
    ) {
        prop_assume!(alpha != beta);
        let ca = ComplexRational::real(int(a));
        let cb = ComplexRational::real(int(b));
        let verdict = classify_binomial(&ca, &alpha, &cb, &beta).unwrap();
        if verdict.stable {
            let f = LatticePolynomial::real(3, [(alpha, int(a)), (beta, int(b))]).unwrap();
            prop_assert!(!falsify_stability_with(&f, 200, 0, Exec::Sequential).unwrap().is_falsified());
        }
    }

    #[test]
    fn products_of_positive_forms_survive_sampling(
        forms in proptest::collection::vec(proptest::collection::vec(0i64..=3, 3), 1..=3),
        seed in 0u64..1000,
    ) {
        prop_assume!(forms.iter().all(|f| f.iter().any(|&a| a > 0)));
        let f = product(3, &forms);
        prop_assert!(!falsify_stability_with(&f, 100, seed, Exec::Sequential).unwrap().is_falsified());
    }
}
