//! Error types shared by every module of the crate.

use thiserror::Error;

/// Errors produced by spin-star operations.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid argument or an inconsistent parameter combination.
    #[error("domain error: {0}")]
    Domain(String),

    /// A dense construction would exceed the configured size cap.
    #[error("resource cap exceeded: required dimension {required_dim} exceeds cap {cap_dim}")]
    Resource { required_dim: usize, cap_dim: usize },

    /// A matrix entry violates the expected X-state sparsity pattern.
    #[error(
        "structure error: off-pattern entry ({row},{col}) has magnitude {magnitude:.3e} (tolerance {tol:.3e})"
    )]
    Structure {
        row: usize,
        col: usize,
        magnitude: f64,
        tol: f64,
    },

    /// A projective measurement outcome has (near-)zero probability.
    #[error("measurement error: outcome {outcome} has probability {probability:.3e}")]
    Measurement { outcome: u8, probability: f64 },

    /// Mismatched operator/state dimensions.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Failure reported by the dense linear-algebra backend.
    #[error("linear algebra backend error: {0}")]
    Backend(String),
}

impl From<ndarray_linalg::error::LinalgError> for Error {
    fn from(err: ndarray_linalg::error::LinalgError) -> Self {
        Error::Backend(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
