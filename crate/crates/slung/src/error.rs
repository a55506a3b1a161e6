//! Crate-wide error type and process exit-code mapping.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration, missing file, inverted range, bad CLI value.
    #[error("config error: {0}")]
    Config(String),

    /// A caller violated an operation contract (shape or bound mismatch).
    #[error("contract violation in {what}: expected {expected}, got {got}")]
    Shape {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    /// Non-finite value where a finite one is required.
    #[error("non-finite value in {0}")]
    NonFinite(String),

    /// A gradient entry was NaN or infinite.
    #[error("non-finite gradient at index {index}")]
    NonFiniteGradient { index: usize },

    /// The physics integrator produced NaN state.
    #[error("simulation diverged at t={time}s: {state}")]
    SimulationDiverged { time: f64, state: String },

    /// The payload left the observable volume (behind the camera).
    #[error("observation invalid: payload depth {depth} m is behind the camera")]
    ObservationInvalid { depth: f64 },

    /// Model rollout produced a non-finite state.
    #[error("model propagation diverged at step {step}")]
    PropagationDiverged { step: usize },

    /// Training loss became non-finite.
    #[error("training diverged: {0}")]
    TrainingDiverged(String),

    /// Online latent inference produced non-finite parameters.
    #[error("adaptation error: {0}")]
    Adaptation(String),

    /// The planner could not produce a finite candidate.
    #[error("planning error: {0}")]
    Planning(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code: 0 success, 2 config error, 3 divergence or
    /// planning error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Io(_) | Error::Json(_) => 2,
            Error::Shape { .. } | Error::NonFinite(_) | Error::NonFiniteGradient { .. } => 2,
            Error::SimulationDiverged { .. }
            | Error::ObservationInvalid { .. }
            | Error::PropagationDiverged { .. }
            | Error::TrainingDiverged(_)
            | Error::Adaptation(_)
            | Error::Planning(_) => 3,
        }
    }
}
