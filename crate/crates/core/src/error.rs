use thiserror::Error;

/// Errors raised by the numeric and series layers.
///
/// Divergent sums and failed identities are *findings* and are carried in
/// reports, not here.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole: {0}")]
    Pole(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no convergence: {0}")]
    Convergence(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown case id `{0}`")]
    UnknownCase(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
