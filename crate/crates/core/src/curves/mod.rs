//! Fan tropical curves whose rays are cyclic 0/1 blocks, their
//! decomposition into chains, and signed Speyer parametrizations.

mod fan;
mod sample;
mod speyer;

pub use fan::{
    decompose_irreducible, normalize_ray, CurvePiece, Interval, Ray, RayShape, ShapeReport, TropicalCurveFan,
};
pub use sample::{
    random_complex, sample_varbar_check, sample_varbar_check_with, trial_rng, SampleReport, DENOMINATOR_BOUND,
    NUMERATOR_BOUND,
};
pub use speyer::{
    default_roots, piece_from_blocks, speyer_parametrization, speyer_parametrization_with_roots, tropicalize_param,
    verify_sequence_properties, SpeyerCoordinate, SpeyerParam,
};
