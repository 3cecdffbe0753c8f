use thiserror::Error;

use crate::parse::ParseError;
use crate::rings::RingSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid element of {ring}: {msg}")]
    InvalidElement { ring: RingSpec, msg: String },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),

    #[error("malformed chain complex: {0}")]
    MalformedComplex(String),

    #[error("tier rejection: {0}")]
    TierRejection(String),

    #[error("matrix is not invertible")]
    NotInvertible,

    #[error("not a surjection: {0}")]
    NotSurjective(String),

    #[error("no lift exists: {0}")]
    NoLift(String),

    #[error("hypothesis failed: {0}")]
    Hypothesis(String),

    #[error("certificate failure in degree {degree}: {msg}")]
    Certificate { degree: usize, msg: String },

    #[error("engine defect: {0}")]
    Defect(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}
