use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("size parameter {param} is not defined for {class} instances")]
    InvalidParam { param: String, class: String },

    #[error("{what} has size {size}, above the oracle budget of {budget}")]
    OverBudget {
        what: &'static str,
        size: usize,
        budget: usize,
    },

    #[error("clause {clause} has {len} literals; at most 2 are supported")]
    ClauseTooLong { clause: usize, len: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("expected a {expected} instance, got {found}")]
    WrongClass { expected: String, found: String },

    #[error("cannot generate instance: {0}")]
    Generation(String),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("oracle failed: {0}")]
    Oracle(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition(message.into())
    }
}
