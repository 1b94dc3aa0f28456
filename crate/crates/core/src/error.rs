use thiserror::Error;

/// Errors raised by constructors, builders and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The requested design does not exist; `condition` states the
    /// governing existence result.
    #[error("{design} does not exist: {condition}")]
    NonexistentDesign { design: String, condition: String },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// An internal construction step produced something that failed its
    /// own postcondition.
    #[error("construction failed: {0}")]
    Construction(String),

    #[error("graph has {edges} edges, exceeding the enumeration budget of {budget}")]
    BudgetExceeded { edges: usize, budget: usize },

    #[error("no construction covers {0}")]
    OutOfScope(String),

    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn nonexistent(design: impl Into<String>, condition: impl Into<String>) -> Self {
        Error::NonexistentDesign {
            design: design.into(),
            condition: condition.into(),
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameters(msg.into())
    }
}
