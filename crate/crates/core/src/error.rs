use thiserror::Error;

use crate::af::ArgumentId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument name {0:?}")]
    InvalidArgumentName(String),

    #[error("unknown argument {0}")]
    UnknownArgument(ArgumentId),

    #[error("attack ({0},{1}) refers to an argument outside the framework")]
    DanglingAttack(ArgumentId, ArgumentId),

    #[error("argument {0} is both certain and uncertain")]
    OverlappingArgument(ArgumentId),

    #[error("argument {0} is uncertain; only certain arguments can be queried")]
    UncertainQuery(ArgumentId),

    #[error("{what} has {size} elements, above the enumeration limit of {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("current framework is not a sub-framework of the universe: {0}")]
    NotASubframework(String),

    #[error("target {0} is not an argument of the current framework")]
    MissingTarget(ArgumentId),

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: argument {id} declared twice")]
    DuplicateDeclaration { line: usize, id: String },

    #[error("line {line}: attack endpoint {id} is not declared")]
    UndeclaredEndpoint { line: usize, id: String },

    #[error("missing `#` separator between nodes and edges")]
    MissingSeparator,

    #[error("expected a plain framework, found uncertain arguments")]
    UnexpectedIncomplete,

    #[error("invalid scenario: {0}")]
    Scenario(String),

    #[error("debate is inconsistent with the model of {agent}: {detail}")]
    ModelInconsistency { agent: String, detail: String },
}

impl Error {
    /// Resource-guard failures are reported separately from validation errors.
    pub fn is_resource_guard(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }
}
