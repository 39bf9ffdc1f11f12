use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Colors or arities do not line up.
    #[error("signature error: {0}")]
    Signature(String),
    #[error("argument error: {0}")]
    Argument(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// A generator that does not exist in the active model.
    #[error("model error: {0}")]
    Model(String),
    #[error("missing decoration for {0}")]
    MissingDecoration(String),
    /// An internal consistency check failed; this indicates a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
