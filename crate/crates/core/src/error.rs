use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("algebra elements live on different sides")]
    SideMismatch,

    #[error("unknown token `{0}`")]
    UnknownToken(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),

    #[error("arrow {0} is not idempotent-coherent")]
    Incoherent(String),

    #[error("structure mismatch: {0}")]
    StructureMismatch(String),

    #[error("path enumeration hit the cap ({0}); the result would be unreliable")]
    CapExceeded(String),

    #[error("boundary does not square to zero ({0} surviving terms)")]
    NotAComplex(usize),

    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
