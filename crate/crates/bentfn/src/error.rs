use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count {n} out of supported range {min}..={max}")]
    VariableCount { n: usize, min: usize, max: usize },

    #[error("point index {index} out of range for n={n}")]
    PointOutOfRange { index: u32, n: usize },

    #[error("dimension mismatch: expected n={expected}, got n={actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("function on {n} variables is not bent: |W({position})| = {value}, expected 2^{{n/2}} = {expected}")]
    NotBent {
        n: usize,
        position: u32,
        value: i32,
        expected: i32,
    },

    #[error("operation requires an even dimension, got {n}")]
    EvenDimensionRequired { n: usize },

    #[error("restricted bentness requires an even subspace dimension, got m={m}")]
    OddSubspaceDimension { m: usize },

    #[error("basis vectors are linearly dependent")]
    DependentBasis,

    #[error("chain target n={target} must be even, greater than the seed's n={seed}, and at most {max}")]
    ChainTarget { target: usize, seed: usize, max: usize },

    #[error("expected {expected} offsets (one per extension step), got {actual}")]
    OffsetCount { expected: usize, actual: usize },

    #[error("{what} supports n <= {max}, got n={n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("exhaustive enumeration supports n in {{2, 4}}, got n={n}")]
    UnsupportedEnumeration { n: usize },

    #[error("pi must be a permutation of 0..2^{half}")]
    InvalidPermutation { half: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("truth table for n={n} needs exactly {expected} hex digits, got {actual}")]
    HexLength {
        n: usize,
        expected: usize,
        actual: usize,
    },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
