use thiserror::Error;

/// Errors shared by every module of the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left_rows}x{left_cols} is not conformable with {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("index {index} out of range for dimension {bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("matrix is singular, cannot invert")]
    Singular,

    #[error("pattern-pair budget exceeded: {needed} pairs requested, budget is {budget}")]
    PatternBudgetExceeded { needed: u128, budget: u128 },

    #[error("simplex budget exceeded: more than {budget} simplices in the clique complex")]
    SimplexBudgetExceeded { budget: usize },

    #[error("edge budget exceeded: {edges} edges, brute-force limit is {limit}")]
    TooManyEdges { edges: usize, limit: usize },

    #[error("graph parse error at line {line}: {message}")]
    GraphParse { line: usize, message: String },

    #[error("graph is disconnected: Laplacian kernel has dimension {kernel_dim}, expected 1")]
    Disconnected { kernel_dim: usize },

    #[error("invalid scalar literal {literal:?}")]
    ScalarParse { literal: String },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,

    #[error("matrix is not normal (A^T A != A A^T)")]
    NotNormal,

    #[error("unpaired nonzero singular value {value} in skew-symmetric spectrum")]
    UnpairedSingularValue { value: f64 },

    #[error("boundary operator dimension {dim} out of range 1..={max}")]
    BoundaryDimension { dim: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
