use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the supported domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Argument sits on a pole or logarithmic singularity.
    #[error("{0}")]
    Pole(String),
    /// The result would not fit in binary64.
    #[error("overflow: {0}")]
    Overflow(String),
    /// An iterative method or adaptive quadrature failed to settle.
    #[error("no convergence: {0}")]
    NonConvergence(String),
    /// A table request exceeds the configured ceiling.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// A query falls outside the range covered by a table.
    #[error("out of range: {0}")]
    Range(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
