use crate::text::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("presentation mismatch: {left} vs {right}")]
    PresentationMismatch { left: String, right: String },
    #[error("element is not homogeneous under {table}")]
    Inhomogeneous { table: String },
    #[error("expected degree {expected} under {table}, found {found}")]
    WrongDegree {
        table: String,
        expected: i64,
        found: i64,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not expressible in the coinvariant generators: {0}")]
    NotExpressible(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
