use thiserror::Error;

use crate::complexcore::MonomialIdeal;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count {n} exceeds the supported maximum of 64")]
    TooManyVertices { n: usize },

    #[error("exhaustive enumeration over {n} vertices is out of range (limit {limit})")]
    TooLarge { n: usize, limit: usize },

    #[error("vertex {vertex} is out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("the void complex corresponds to the unit ideal")]
    UnitIdeal,

    #[error("monomial ideal is not square-free; polarize it first")]
    NotSquareFree,

    #[error("face {face} is not a face of the complex")]
    FaceNotInComplex { face: String },

    #[error("the given complex is not a subcomplex")]
    NotSubcomplex,

    #[error("{0} is not a prime in the range [2, 2^31)")]
    NotPrime(u64),

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("monomial ideal does not have finite colength")]
    NotArtinian,

    #[error("generic initial ideal did not stabilize: {first} vs {second}")]
    GinUnstable {
        first: Box<MonomialIdeal>,
        second: Box<MonomialIdeal>,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
