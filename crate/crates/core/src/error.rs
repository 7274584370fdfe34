use thiserror::Error;

/// Errors produced by the root-system, grading and sequence machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system type `{0}`")]
    UnsupportedType(String),

    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("expected {expected} coefficients, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("node index {index} out of range 1..={rank}")]
    NodeOutOfRange { index: usize, rank: usize },

    #[error("{0} is not a root of this root system")]
    NotARoot(String),

    #[error("integer overflow in weight arithmetic")]
    Overflow,

    #[error("invalid parabolic pair: {0}")]
    InvalidPair(String),

    #[error("operation requires a type A root system, got {0}")]
    RequiresTypeA(String),

    #[error("cannot parse Dynkin label `{text}`: {reason}")]
    Parse { text: String, reason: String },

    #[error("label mismatch: {0}")]
    LabelMismatch(String),

    #[error("invalid torsion data: {0}")]
    InvalidTorsion(String),

    #[error("unknown catalog `{0}`")]
    UnknownCatalog(String),

    /// An internal consistency check failed. Seeing this is a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
