use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),

    /// Well-formed input that violates a structural requirement.
    #[error("validation error: {0}")]
    Validation(String),

    /// A query or construction went beyond the degree it was truncated at.
    #[error("cap exceeded: requested degree {requested}, cap is {cap}")]
    CapExceeded { requested: i64, cap: i64 },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Integer overflow in a dimension count.
    #[error("overflow computing {0}")]
    Overflow(&'static str),

    /// An identity that must hold for mathematical reasons failed.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::Validation(_) => "validation",
            Error::CapExceeded { .. } => "cap-exceeded",
            Error::Unknown { .. } => "unknown",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::Overflow(_) => "overflow",
            Error::Internal(_) => "internal",
        }
    }

    pub fn unknown(kind: &'static str, name: impl Into<String>) -> Self {
        Error::Unknown {
            kind,
            name: name.into(),
        }
    }
}
