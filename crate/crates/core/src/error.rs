use thiserror::Error;

/// Errors raised by the library.
///
/// The variants line up with the CLI exit-code classes: input and
/// precondition problems, internal-consistency violations, and resource
/// limits (including arithmetic overflow).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency violated: {0}")]
    Consistency(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(String),

    #[error("{what} = {requested} exceeds the limit {limit}")]
    Bound {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
}

impl Error {
    pub(crate) fn overflow(context: impl Into<String>) -> Self {
        Error::Overflow(context.into())
    }

    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
