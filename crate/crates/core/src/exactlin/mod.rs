//! Exact rational linear algebra.

mod complex;
pub mod lp;
mod matrix;
mod pluecker;
mod signs;

pub use complex::{is_positively_hyperbolic_linear, ComplexMatrix, LinearCertificate};
pub use matrix::{primitive, ExactMatrix};
pub use pluecker::{grassmannian_class, maximal_minors, orthogonal_complement, GrassmannClass, PlueckerVector};
pub use signs::{
    covectors, feasible_sign_patterns, feasible_sign_patterns_exhaustive, max_var_over_subspace,
    max_varbar_over_subspace, prefix_feasible, sign_orthant_feasible, variation_summary, VariationSummary,
};

use itertools::Itertools;
use num_traits::Zero;

use crate::matroids::{Matroid, Subset};

/// Matroid of linear dependencies among the columns of `m`.
pub fn matroid_of_columns(m: &ExactMatrix) -> crate::Result<Matroid> {
    let n = m.ncols();
    let (basis_rows, _) = m.rref();
    let r = basis_rows.nrows();
    let bases: Vec<Subset> = (0..n)
        .combinations(r)
        .filter(|s| !basis_rows.minor(s).is_zero())
        .map(|s| Subset::from_indices(&s))
        .collect::<crate::Result<_>>()?;
    Matroid::from_bases(n, r, bases)
}
