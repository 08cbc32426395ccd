use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("invalid zero table: {0}")]
    ZeroTable(String),

    #[error("zero search failed: {0}")]
    ZeroSearch(String),

    #[error("infeasible plan: {reason}")]
    Infeasible {
        reason: String,
        /// Height the zero table would need to reach, when that is the blocker.
        zeros_needed_to: Option<f64>,
    },

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
