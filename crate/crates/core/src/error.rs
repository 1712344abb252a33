use thiserror::Error;

/// Errors raised by the algebra kernel and the command-line shell.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("leading word of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("word has weight {0}, expected 0")]
    BadWeight(i64),
    #[error("term contains no circle product")]
    NoCirc,
    #[error("bad slot position: {0}")]
    BadPosition(String),
    #[error("monomial must be non-empty")]
    EmptyMonomial,
    #[error("bad row shape: {0}")]
    BadShape(String),
    #[error("relation {0} is not homogeneous of weight 0")]
    NotWeightZero(usize),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("dimension mismatch: {tableaux} tableaux vs {words} weight-0 words")]
    DimensionMismatch { tableaux: usize, words: usize },
    #[error("invalid generator list: {0}")]
    InvalidGenerators(String),
    #[error("{0}")]
    Io(String),
    #[error("parse error at position {position}: {message} (expected {})", expected.join(", "))]
    Parse {
        position: usize,
        message: String,
        expected: Vec<String>,
    },
}

impl Error {
    /// True for errors caused by malformed input rather than by the mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::InvalidGenerators(_) | Error::Io(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
