use thiserror::Error;

/// Errors raised by the library. Every variant describes malformed input or a
/// violated precondition; none of them signal a numerical failure.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("the zero vector is not allowed here")]
    ZeroVector,

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("invalid rational literal `{0}`")]
    ParseRational(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("basis exchange fails: removing {element} from {first:?} admits no replacement from {second:?}")]
    ExchangeViolation { first: Vec<usize>, second: Vec<usize>, element: usize },

    #[error("matroid has a loop at element {0}")]
    HasLoop(usize),

    #[error("ground set too large: {0} elements (limit {1})")]
    TooLarge(usize, usize),

    #[error("points do not share a coordinate sum")]
    NotHomogeneous,

    #[error("polynomial has non-real coefficients")]
    NotReal,

    #[error("invalid tropical curve: {0}")]
    InvalidCurve(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
