use thiserror::Error;

use crate::algebra::AxiomReport;

/// A malformed input file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is not tied to a single line.
    pub line: usize,
    pub reason: String,
}

impl ParseError {
    pub fn new(line: usize, reason: impl Into<String>) -> Self {
        Self {
            line,
            reason: reason.into(),
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("{a} not <= {b}")]
    NotBelow { a: String, b: String },

    #[error("table is not an effect algebra: {}", .0.summary())]
    AxiomsFailed(Box<AxiomReport>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("closure exceeded the cap of {0} members")]
    CapExceeded(usize),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("value outside [0,1]: {0}")]
    OutOfRange(String),

    #[error("unsupported corpus spec `{0}`")]
    UnsupportedCorpus(String),

    #[error("state is underdetermined: no value for {0}")]
    Underdetermined(String),

    #[error("{0}")]
    Infeasible(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
