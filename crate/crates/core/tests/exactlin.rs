use proptest::prelude::*;
use trophyp::exactlin::*;
use trophyp::matroids::Matroid;
use trophyp::par::Strategy as Exec;
use trophyp::rational::{int, Rational};
use trophyp::signvar::{var, varbar};

fn full_rank(
    rows: std::ops::RangeInclusive<usize>,
    cols: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = ExactMatrix> {
    (rows, cols)
        .prop_flat_map(|(r, n)| proptest::collection::vec(proptest::collection::vec(-3i64..=3, n), r.min(n)))
        .prop_map(|rows| ExactMatrix::from_ints(&rows))
        .prop_filter("full row rank", |m| m.rank() == m.nrows())
}

#[test]
fn one_dimensional_examples() {
    assert_eq!(max_var_over_subspace(&ExactMatrix::from_ints(&[[1, 1, 1]])).unwrap(), 0);
    assert_eq!(max_var_over_subspace(&ExactMatrix::from_ints(&[[1, -1]])).unwrap(), 1);
    assert_eq!(max_varbar_over_subspace(&ExactMatrix::from_ints(&[[1, 0, 1]])).unwrap(), 2);
}

#[test]
fn moment_curve_is_positive() {
    let m = ExactMatrix::from_ints(&[[1, 1, 1, 1, 1], [1, 2, 3, 4, 5], [1, 4, 9, 16, 25]]);
    assert_eq!(grassmannian_class(&m).unwrap(), GrassmannClass::Positive);
    assert_eq!(max_varbar_over_subspace(&m).unwrap(), 2);
    let perp = orthogonal_complement(&m).unwrap();
    assert_eq!(perp.nrows(), 2);
    assert!(perp.mul(&m.transpose()).unwrap().is_zero());
}

#[test]
fn lp_basics() {
    use trophyp::exactlin::lp::{LinearProgram, LpOutcome, Relation};
    let mut lp = LinearProgram::new(2);
    lp.set_objective(vec![int(1), int(1)]);
    lp.add(vec![int(1), int(2)], Relation::Le, int(4));
    lp.add(vec![int(3), int(1)], Relation::Le, int(6));
    lp.set_nonnegative(0);
    lp.set_nonnegative(1);
    match lp.solve() {
        LpOutcome::Optimal { value, .. } => assert_eq!(value, Rational::new(14.into(), 5.into())),
        o => panic!("{o:?}"),
    }
    let mut bad = LinearProgram::new(1);
    bad.add(vec![int(1)], Relation::Ge, int(1));
    bad.add(vec![int(1)], Relation::Le, int(0));
    assert!(!bad.is_feasible());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn covectors_match_lp_search(m in full_rank(1..=3, 1..=5)) {
        let cov = covectors(&m).unwrap();
        prop_assert_eq!(&cov, &feasible_sign_patterns(&m, Exec::Sequential));
        prop_assert_eq!(&cov, &feasible_sign_patterns_exhaustive(&m, Exec::Parallel));
    }

    #[test]
    fn covectors_are_realized(m in full_rank(1..=3, 2..=6), y in proptest::collection::vec(-3i64..=3, 3)) {
        let y: Vec<Rational> = y[..m.nrows()].iter().map(|&x| int(x)).collect();
        let v = m.combine_rows(&y);
        let s = trophyp::signvar::SignPattern::of(&v);
        prop_assert!(covectors(&m).unwrap().contains(&s));
        prop_assert!(sign_orthant_feasible(&m, &s).unwrap());
    }

    #[test]
    fn gantmacher_krein_both_ways(m in full_rank(1..=3, 2..=6)) {
        let c = m.nrows();
        let class = grassmannian_class(&m).unwrap();
        let s = variation_summary(&m).unwrap();
        prop_assert_eq!(class.is_nonnegative(), s.max_var.unwrap() < c);
        prop_assert_eq!(class == GrassmannClass::Positive, s.max_varbar.unwrap() < c);
        let perp = orthogonal_complement(&m).unwrap();
        if perp.nrows() > 0 {
            let d = variation_summary(&perp).unwrap();
            prop_assert_eq!(class.is_nonnegative(), d.min_varbar.unwrap() >= c);
            prop_assert_eq!(class == GrassmannClass::Positive, d.min_var.unwrap() >= c);
        }
    }

    #[test]
    fn extremes_bound_each_vector(m in full_rank(1..=3, 2..=6), y in proptest::collection::vec(-3i64..=3, 3)) {
        let y: Vec<Rational> = y[..m.nrows()].iter().map(|&x| int(x)).collect();
        let v = m.combine_rows(&y);
        prop_assume!(v.iter().any(|x| *x != int(0)));
        let s = variation_summary(&m).unwrap();
        prop_assert!(var(&v) <= s.max_var.unwrap() && var(&v) >= s.min_var.unwrap());
        prop_assert!(varbar(&v) <= s.max_varbar.unwrap() && varbar(&v) >= s.min_varbar.unwrap());
    }

    #[test]
    fn complement_gives_dual_matroid(m in full_rank(1..=3, 2..=6)) {
        let perp = orthogonal_complement(&m).unwrap();
        let mm = matroid_of_columns(&m).unwrap();
        if perp.nrows() == 0 {
            prop_assert_eq!(mm.rank(), mm.n());
        } else {
            prop_assert_eq!(matroid_of_columns(&perp).unwrap(), mm.dual());
        }
    }

    #[test]
    fn minors_scale_under_row_operations(m in full_rank(2..=3, 3..=5), k in 1i64..=3) {
        let p = maximal_minors(&m).unwrap();
        let mut rows = m.to_rows();
        let first = rows[1].clone();
        for (a, b) in rows[0].iter_mut().zip(&first) {
            *a += b * int(k);
        }
        let q = maximal_minors(&ExactMatrix::from_rows(m.ncols(), rows).unwrap()).unwrap();
        prop_assert!(p.values().eq(q.values()));
    }
}

#[test]
fn uniform_column_matroid() {
    let m = ExactMatrix::from_ints(&[[1, 1, 1, 1], [0, 1, 2, 3]]);
    assert_eq!(matroid_of_columns(&m).unwrap(), Matroid::uniform(2, 4));
}
