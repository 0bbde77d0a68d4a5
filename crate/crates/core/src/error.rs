use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("shape mismatch: expected {expected_rows}x{expected_cols}, found {rows}x{cols}")]
    ShapeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },

    #[error("dimension {0} is out of the supported range 1..=64")]
    UnsupportedDimension(usize),

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("{what} of size {size} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("invalid partial bijection: {0}")]
    InvalidBijection(&'static str),

    #[error("invalid ordered set partition: {0}")]
    InvalidPartition(&'static str),

    #[error("row set of size {rows} and column set of size {cols} differ")]
    UnequalSubsets { rows: usize, cols: usize },

    #[error("the matrix is not a type of this arrangement")]
    NotAType,

    #[error("invalid rational literal")]
    InvalidScalar,

    #[error("matrix must be square, found {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
