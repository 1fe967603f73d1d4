use thiserror::Error;

/// Errors raised by the library. Usage errors only: an engine never
/// returns an error for a mathematically well-posed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight {0:?} is not weakly decreasing")]
    NotDominant(Vec<i32>),

    #[error("young diagram {0:?} has a negative part")]
    NegativePart(Vec<i32>),

    #[error("cannot parse weight from {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("diagram {diagram} does not fit in the {h}x{w} block")]
    BlockMismatch { diagram: String, h: usize, w: usize },

    #[error("diagram {diagram} must have first row equal to {w}")]
    NotFullWidth { diagram: String, w: usize },

    #[error("weight {weight} has length {found}, expected {expected}")]
    LengthMismatch {
        weight: String,
        expected: usize,
        found: usize,
    },

    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("symplectic weight {diagram} has more than {n} rows")]
    TooManyRows { diagram: String, n: usize },

    #[error("fundamental representation index {i} out of range 1..={n}")]
    FundamentalIndex { i: usize, n: usize },

    #[error("symplectic product {lambda} x {mu} is outside the stable range for n = {n}")]
    UnstableRange { lambda: String, mu: String, n: usize },

    #[error("block Y_{{{h},{w}}} is too large for LGr({n}, {dim}): need h + w <= n + 1", dim = 2 * .n)]
    BlockTooLarge { h: usize, w: usize, n: usize },

    #[error("gram matrix is not unitriangular at ({row}, {col}): {value}")]
    NotUnitriangular {
        row: String,
        col: String,
        value: String,
    },

    #[error("complexes do not splice: {left} != {right}")]
    SpliceMismatch { left: String, right: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown lemma suite {0:?}")]
    UnknownLemma(String),
}

pub type Result<T> = std::result::Result<T, Error>;
