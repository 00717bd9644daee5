use thiserror::Error;

/// Errors raised by the combinatorial routines.
///
/// Each variant names the invariant that was violated so front ends can
/// report it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("operator index {index} outside [0, {max}]")]
    InvalidIndex { index: usize, max: usize },

    #[error("invalid bounded affine permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid Grassmann necklace: {0}")]
    InvalidNecklace(String),

    #[error("invalid partial noncrossing pairing: {0}")]
    InvalidPairing(String),

    #[error("pair is not standard: {0}")]
    NonStandardPair(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("enumeration of {predicted} objects exceeds the cap of {cap}")]
    CapExceeded { predicted: u128, cap: u64 },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
