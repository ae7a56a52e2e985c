//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by circle arithmetic, representation evaluation,
/// the optimizer, and the command-line front end.
#[derive(Debug, Error)]
pub enum Error {
    /// Two sample grids were combined but have different sizes.
    #[error("grid size mismatch: {left} vs {right}")]
    GridSizeMismatch { left: usize, right: usize },

    /// A grid is too coarse to resolve the requested band.
    #[error("grid of {got} points cannot resolve {need} Fourier modes")]
    GridTooSmall { need: usize, got: usize },

    /// A constructor or family generator received an out-of-range value.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Uncertainty reports are undefined for the zero function.
    #[error("the zero function admits no uncertainty report")]
    ZeroFunction,

    /// The finite-difference generator needs a nonzero step.
    #[error("finite-difference step must be nonzero")]
    ZeroStep,

    /// The objective was evaluated below the configured derivative floor.
    #[error("|Tf|/|f| = {got:.6e} is below the configured floor {floor:.6e}")]
    BelowDerivativeFloor { got: f64, floor: f64 },

    /// No feasible starting point was found for the optimizer.
    #[error("no feasible starting point found after {0} resampling attempts")]
    InfeasibleStart(usize),

    /// Invalid command-line configuration.
    #[error("{0}")]
    Config(String),

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// Malformed JSON input; the message names the offending field.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    /// CSV serialization failure.
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
