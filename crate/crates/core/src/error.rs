use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter is outside its admissible domain.
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// Vector length does not match the grid or the expected dimension.
    #[error("dimension mismatch for {what}: expected {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    /// The nonlinear solver ran out of iterations.
    #[error("nonlinear solve did not converge after {iterations} iterations (residual {residual:.3e}{})",
            node.map(|n| format!(" at node {n}")).unwrap_or_default())]
    NonConvergence {
        iterations: usize,
        residual: f64,
        node: Option<usize>,
    },

    /// A noise specification violates the admissibility gate.
    #[error("noise rejected: {condition}")]
    NoiseRejected { condition: String },

    /// A quantity required by a diagnostic is degenerate (e.g. zero norms).
    #[error("degenerate input for {what}: {reason}")]
    Degenerate { what: &'static str, reason: String },

    /// Function value does not fit in f64.
    #[error("overflow evaluating {what} at argument {argument}")]
    Overflow { what: &'static str, argument: f64 },

    /// I/O failure while writing artifacts.
    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn io(path: &std::path::Path, err: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }
}
