use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("set {index} is empty")]
    EmptySet { index: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("element {element} of set {set} is not a node of the forest")]
    UnknownElement { set: usize, element: usize },

    #[error("hypergraph is not acyclic; no join forest exists")]
    NotAcyclic,

    #[error("universe of {n} elements exceeds the brute-force cap of {cap}")]
    UniverseTooLarge { n: usize, cap: usize },

    #[error("bad generator config: {0}")]
    BadConfig(String),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid forest: {0}")]
    InvalidForest(String),

    #[error("verdict mismatch on instance {id}: acyclicity={acyclic}, spanning={spanning}")]
    VerdictMismatch {
        id: String,
        acyclic: bool,
        spanning: bool,
    },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
