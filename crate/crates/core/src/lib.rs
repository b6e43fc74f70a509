//! Exact-arithmetic toolkit for positively hyperbolic varieties.
//!
//! The crate is organised around the objects that show up when one asks
//! whether a variety avoids every positive linear subspace:
//!
//! * [`signvar`] counts sign changes (`var`, `varbar`) and answers the
//!   pointwise membership questions for positive / nonnegative subspaces.
//! * [`exactlin`] is exact rational linear algebra: minors, Plücker vectors,
//!   Grassmannian sign classes, orthogonal complements, column matroids and
//!   an exact simplex used for sign-orthant feasibility.
//! * [`matroids`] holds the matroid core, matroid-polytope faces, the
//!   non-crossing tests and positroid recognition.
//! * [`bergman`] is Bergman fan membership and the non-crossing span
//!   condition on its cones.
//! * [`stability`] covers Newton polytopes, M-convexity, t-initial forms,
//!   binomial stability and Sturm-based falsification.
//! * [`curves`] builds signed Speyer parametrizations of fan tropical curves.
//! * [`symmetry`] handles signed-permutation preservers and toric varieties.
//!
//! Everything is exact; there is no floating point on any decision path.
//! Sweeps that are embarrassingly parallel take a [`par::Strategy`] and run
//! on rayon when the `parallel` feature is enabled.

pub mod bergman;
pub mod curves;
pub mod error;
pub mod exactlin;
pub mod matroids;
pub mod par;
pub mod rational;
pub mod signvar;
pub mod stability;
pub mod symmetry;

pub use error::{Error, Result};
pub use rational::{ComplexRational, Rational};

/// Library version, recorded in CLI verdicts.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
