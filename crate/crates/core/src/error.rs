use thiserror::Error;

/// Errors reported by the library.
///
/// Contract violations between objects the caller constructed (dimension
/// mismatches, out-of-range indices) panic instead; everything that depends
/// on run-time data goes through this enum.
#[derive(Debug, Error)]
pub enum Error {
    #[error("genus {0} outside the supported range 1..=32")]
    GenusOutOfRange(usize),

    #[error("matrix is singular over GF(2)")]
    NotInvertible,

    #[error("matrix does not preserve the mod-2 intersection pairing")]
    NotSymplectic,

    #[error("action - id is singular, so the invariant form is not unique")]
    NotUnique,

    #[error("enumeration over {dim} basis bits exceeds the guard of {cap}")]
    EnumerationTooLarge { dim: usize, cap: usize },

    #[error("form has Arf invariant 1, so it bounds no embedding recipe")]
    NotBounding,

    #[error("unknown curve name `{0}`")]
    UnknownCurve(String),

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),

    #[error("{0}")]
    UnsupportedBuiltin(String),

    #[error("connected sum needs at least one part")]
    EmptySum,

    #[error("sum part claims neither a bounding nor an unbounding invariant structure")]
    InvalidPartProfile,

    #[error("missing value for basis label `{0}`")]
    MissingLabel(String),

    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),

    #[error("the given curve classes do not form a basis")]
    NotABasis,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
