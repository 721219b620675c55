use thiserror::Error;

/// Errors raised by the numerical routines of this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("series or iteration did not converge: {0}")]
    Convergence(String),
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("numerical error: {0}")]
    Numerical(String),
    #[error("quadrature failed: {0}")]
    Quadrature(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("eigensolver failed in trial {trial}: {msg}")]
    Eigensolver { trial: usize, msg: String },
    #[error("conjugate pairing failed in trial {trial}: mismatch {mismatch:e} exceeds {tolerance:e}")]
    Pairing { trial: usize, mismatch: f64, tolerance: f64 },
    #[error("coincident points {0} and {1}")]
    Coincidence(usize, usize),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
