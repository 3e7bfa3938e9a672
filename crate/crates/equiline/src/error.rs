//! Shared error type for the exact arithmetic, graph, and engine layers.

use num::BigUint;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("square root of a negative value")]
    NegativeRadicand,

    #[error("radicand {0} exceeds the 64-bit square-free normalization budget")]
    RadicandTooLarge(BigUint),

    #[error("incompatible radicands sqrt({0}) and sqrt({1})")]
    IncompatibleRadicands(BigUint, BigUint),

    #[error("cannot parse {kind}: {reason}")]
    Parse { kind: &'static str, reason: String },

    #[error("adjacency entry at row {row}, column {col} is not 0 or 1")]
    NonBinaryEntry { row: usize, col: usize },

    #[error("adjacency matrix is not symmetric at row {row}, column {col}")]
    AsymmetricEntry { row: usize, col: usize },

    #[error("adjacency diagonal entry at index {index} is nonzero")]
    NonZeroDiagonal { index: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("srg({v},{k},{lambda},{mu}) is complete multipartite (mu = k); no second eigenvalue pair")]
    CompleteMultipartite { v: u64, k: u64, lambda: u64, mu: u64 },

    #[error("eigenvalue multiplicities of srg({v},{k},{lambda},{mu}) are not integers")]
    NonIntegralMultiplicities { v: u64, k: u64, lambda: u64, mu: u64 },

    #[error("srg({v},{k},{lambda},{mu}) does not satisfy the regular two-graph condition v = 4k - 2*lambda - 2*mu")]
    DescentHypothesis { v: u64, k: u64, lambda: u64, mu: u64 },

    #[error("descent from srg({v},{k},{lambda},{mu}) produces non-integral parameters")]
    NonIntegralDescent { v: u64, k: u64, lambda: u64, mu: u64 },

    #[error("claimed angle {claimed} does not match the Welch angle {expected}")]
    AngleMismatch { claimed: String, expected: String },

    #[error("io error reading {path}: {reason}")]
    Io { path: String, reason: String },

    #[error("eigendecomposition failed: {0}")]
    Eigen(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code the CLI maps this error to. Internal invariant
    /// violations exit 2; everything else is an input error and exits 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) | Error::Eigen(_) => 2,
            _ => 1,
        }
    }
}
