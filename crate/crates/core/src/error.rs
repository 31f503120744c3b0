use thiserror::Error;

use crate::field::ScalarParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix of size {0} is too large for eigen-structure analysis (max 4)")]
    MatrixTooLarge(usize),

    #[error("parity violation: {0}")]
    Parity(String),

    #[error("antisymmetry violation: {0}")]
    Antisymmetry(String),

    #[error("duplicate entry: {0}")]
    Duplicate(String),

    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),

    #[error("invalid basis: {0}")]
    Basis(String),

    #[error("degenerate bilinear form: {0}")]
    DegenerateForm(String),

    #[error("a bilinear form is required for {0}")]
    MissingForm(&'static str),

    #[error("not a derivation: {0}")]
    NotADerivation(String),

    #[error("not skew-symmetric: {0}")]
    NotSkew(String),

    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("not a 2-cocycle: {0}")]
    NotACocycle(String),

    #[error("invalid pairing: {0}")]
    InvalidPairing(String),

    #[error("constructed algebra failed verification: {0}")]
    Verification(String),

    #[error("form parity mismatch: {0}")]
    FormParity(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("inadmissible parameter: {0}")]
    Inadmissible(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("line {line}, column {column}: {source}")]
    At {
        line: usize,
        column: usize,
        source: Box<Error>,
    },

    #[error(transparent)]
    Scalar(#[from] ScalarParseError),
}

impl Error {
    /// Attaches a source position to errors raised while reading a file.
    pub(crate) fn at(self, line: usize, column: usize) -> Error {
        match self {
            Error::At { .. } => self,
            other => Error::At {
                line,
                column,
                source: Box::new(other),
            },
        }
    }

    /// The error with any position wrapper removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::At { source, .. } => source.root(),
            other => other,
        }
    }
}
