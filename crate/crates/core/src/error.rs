use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("mediating morphism could not be constructed: {0}")]
    MediatingNotFound(String),

    #[error("mediating morphism is not unique: {0}")]
    UniquenessViolation(String),

    #[error("inconsistent construction: {0}")]
    ConstructionInconsistent(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("vertex {vertex} out of range for {vertex_count} vertices (line {line})")]
    Range {
        vertex: usize,
        vertex_count: usize,
        line: usize,
    },

    #[error("size bound exceeded: {size} > {bound} ({what})")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("no witness found within budget {budget}")]
    BudgetExhausted { budget: usize },

    #[error("morphisms are not composable: {0}")]
    NotComposable(String),
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
