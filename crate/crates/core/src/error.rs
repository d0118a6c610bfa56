use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertices span an affine subspace of dimension {span} inside R^{ambient}")]
    NotFullDimensional { ambient: usize, span: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A computed quantity contradicts a proven identity. This always points
    /// at a bug in the enumeration or algebra code, never at user input.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("malformed Ehrhart series: {0}")]
    MalformedSeries(String),

    #[error("no regular sequence found after {attempts} attempts")]
    RegularSequenceNotFound { attempts: usize },

    #[error("all Lawrence prism heights are zero")]
    AllHeightsZero,

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
