use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter lies outside its admissible domain.
    #[error("invalid parameter: {0}")]
    Domain(String),

    /// Input outside the numerically supported range of an evaluator.
    #[error("out of supported range: {0}")]
    OutOfRange(String),

    /// An iterative scheme failed to reach the requested tolerance.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// A truncation window could not be sized to the requested tolerance.
    #[error("truncation failure: {0}")]
    Truncation(String),

    /// The requested encoding window does not contain the boundary.
    #[error("window too small: {0}")]
    WindowTooSmall(String),

    /// Deliberately unimplemented functionality.
    #[error("not implemented: {0}")]
    NotImplemented(&'static str),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}
