//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("empty point cloud")]
    EmptyCloud,

    #[error("rank-deficient subspace: numerical rank {rank} < requested {requested}")]
    RankDeficient { rank: usize, requested: usize },

    #[error("optimizer failed to meet tolerances after {restarts} restarts: {detail}")]
    OptimizerFailure { restarts: usize, detail: String },

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("no admissible projection index in the provided spectrum: {0}")]
    SpectrumExhausted(String),

    #[error("serialization error: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
