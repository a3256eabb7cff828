use thiserror::Error;

use crate::ring::RingError;

/// Errors raised by matrix construction, the oracles and the algorithms.
///
/// Every index carried by a variant is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] RingError),

    #[error("shape mismatch in {op}: {}x{} vs {}x{}", left.0, left.1, right.0, right.1)]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not skew-symmetric at index pair ({i}, {j})")]
    NotSkew { i: usize, j: usize },

    #[error("index {index} is out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("indices must differ, got ({index}, {index})")]
    RepeatedIndex { index: usize },

    #[error("operation requires an even dimension, got {dim}")]
    OddDimension { dim: usize },

    #[error("dimension {dim} is below the minimum {min}")]
    DimensionTooSmall { dim: usize, min: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("expected {expected} entries, found {found}")]
    WrongCount { expected: usize, found: usize },

    #[error("{what} oracle refuses dimension {dim} (bound {bound})")]
    AboveBound {
        what: &'static str,
        dim: usize,
        bound: usize,
    },

    #[error("clow length must be even, got {len}")]
    OddLength { len: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
