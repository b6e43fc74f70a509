//! Signed permutations and linear maps preserving positive hyperbolicity,
//! and the positivity test for toric varieties.

mod linear;
mod perm;
mod toric;

pub use linear::{linear_map_preserves, linear_preserver_verdict, LinearPreserverVerdict, Minor};
pub use perm::{
    all_signed_permutations, cyc, expected_generators, generate_group, neg, preserver_subgroup,
    preserver_subgroup_with, preserves_threshold, rev, PreserverReport, SignedPermutation, MAX_PRESERVER_N,
};
pub use toric::{
    describe_parametrization, monomial_point, sample_toric_varbar, toric_algebraic_matroid,
    toric_positively_hyperbolic, IntegerMatrix, ToricMatroidReport, ToricObstruction, ToricSampleReport, ToricVerdict,
};
