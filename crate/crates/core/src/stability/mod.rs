//! Newton polytopes, M-convexity, initial forms and stability checks.

mod binomial;
mod mconvex;
mod poly;
mod polytope;
mod realroot;
mod univariate;

pub use binomial::{classify_binomial, BinomialCase, BinomialVerdict, StabilityCondition};
pub use mconvex::{
    exchange_failure, in_tropical_hypersurface, in_tropical_prevariety, is_m_convex_function,
    is_m_convex_function_with, is_m_convex_set, is_m_convex_set_by_hull, lower_cells, tinit, MConvexFunctionVerdict,
};
pub use poly::{Exponent, LatticePointSet, LatticePolynomial, ValuedCoefficient, ValuedPolynomial};
pub use polytope::{
    hull_contains, is_generalized_permutohedron, is_root_direction, polytope_edges, polytope_edges_with, vertices, Edge,
};
pub use realroot::{
    falsify_stability, falsify_stability_with, real_rooted_on_line, restrict_to_line, sample_line, FalsifyOutcome,
    SAMPLE_BOUND,
};
pub use univariate::UniPoly;

/// Vertices of the Newton polytope of a polynomial.
pub fn newton_polytope_vertices(support: &[Vec<i64>], n: usize) -> crate::Result<LatticePointSet> {
    Ok(vertices(&LatticePointSet::new(n, support.to_vec())?))
}
