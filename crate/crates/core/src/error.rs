//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration values (bad shapes, bit widths, schedules, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// Mismatch between an architecture description and a set of weights.
    #[error("structural error: {0}")]
    Structure(String),

    /// Malformed file contents.
    #[error("parse error: {0}")]
    Parse(String),

    /// Degenerate or impossible quantization ranges.
    #[error("calibration error: {0}")]
    Calibration(String),

    /// Statistics snapshots that do not line up layer by layer.
    #[error("alignment error: {0}")]
    Alignment(String),

    /// Invalid runtime inputs (empty sets, undersized batches, ...).
    #[error("input error: {0}")]
    Input(String),

    /// Dataset files missing or failing verification.
    #[error("ingestion error: {0}")]
    Ingestion(String),

    /// Model lacks a feature an operation depends on (e.g. BN layers).
    #[error("unsupported model: {0}")]
    Unsupported(String),

    /// Non-finite losses or other numeric breakdowns; message carries
    /// step-level diagnostics.
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// Pretraining missed its accuracy band; the per-epoch accuracy
    /// trajectory is attached.
    #[error("pretraining failure: {message} (trajectory: {trajectory:?})")]
    Pretrain {
        message: String,
        trajectory: Vec<f64>,
    },

    /// A required upstream artifact (checkpoint, arch file) is absent.
    #[error("missing artifact: {0}")]
    MissingArtifact(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}
