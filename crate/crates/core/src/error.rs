use thiserror::Error;

/// Errors raised by the workbench. Every fallible operation in the crate
/// returns this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at column {column}: {message} (token `{token}`)")]
    Parse {
        token: String,
        column: usize,
        message: String,
    },

    #[error("no image supplied for generator {0}")]
    MissingImage(u32),

    #[error("strand count mismatch: expected {expected}, found {found}")]
    StrandMismatch { expected: usize, found: usize },

    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: usize, right: usize },

    #[error("base mismatch: cannot combine a disk fibration with a sphere fibration")]
    BaseMismatch,

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("factorizations live in different group contexts")]
    ContextMismatch,

    #[error("search budget must be positive")]
    ZeroBudget,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("invariant `{0}` is not available for this group context")]
    UnsupportedInvariant(&'static str),

    #[error("homomorphism count target S_{0} is outside the supported range 1..=6")]
    DegreeOutOfRange(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(token: impl Into<String>, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            column,
            message: message.into(),
        }
    }
}
