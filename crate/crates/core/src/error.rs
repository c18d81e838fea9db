use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("numerator vanishes to lower order than denominator at {0}")]
    PoleAtLimit(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("inexact division during fraction-free elimination")]
    InternalInexactDivision,
    #[error("matrix does not have checkerboard support")]
    NotCheckerboard,
    #[error("need recurrence coefficients up to order {needed}, have {available}")]
    InsufficientCoefficients { needed: usize, available: usize },
    #[error("degenerate moments: Hankel determinant of order {order} vanishes")]
    DegenerateMoments { order: usize },
    #[error("sequence term {k} does not vanish at the limit point")]
    CommonRootViolated { k: usize },
    #[error("index {index} outside the valid range of {id}")]
    OutOfRange { id: String, index: usize },
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown sequence `{0}`")]
    UnknownSequence(String),
    #[error("umbral expression keeps a negative exponent {0} after expansion")]
    NegativeUmbralExponent(i64),
    #[error("algorithm {0} does not apply to this matrix")]
    UnsupportedAlgorithm(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}
