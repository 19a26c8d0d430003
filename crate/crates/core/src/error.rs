use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Location-tagged failure while reading a `.gq` source.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("undeclared vertex `{0}`")]
    UndeclaredVertex(String),
    #[error("undeclared arrow `{0}`")]
    UndeclaredArrow(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("relation {second} . {first} is not composable: target of `{first}` is `{first_target}`, source of `{second}` is `{second_source}`")]
    NotComposable {
        first: String,
        second: String,
        first_target: String,
        second_source: String,
    },
    #[error("duplicate relation {second} . {first}")]
    DuplicateRelation { first: String, second: String },
    #[error("`quiver` declared more than once")]
    DuplicateQuiverName,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation {second} . {first} is not composable")]
    NotComposable { first: String, second: String },
    #[error("duplicate relation {second} . {first}")]
    DuplicateRelation { first: String, second: String },

    #[error("presentation is not gentle: {}", .0.join("; "))]
    NotGentle(Vec<String>),
    #[error("presentation is not admissible-complete; offending arrows: [{}]", .arrows.join(", "))]
    NotAdmissibleComplete {
        arrows: Vec<String>,
        vertices: Vec<String>,
    },
    #[error("arrows [{}] lie on no admissible cycle", .0.join(", "))]
    NotFiniteProjective(Vec<String>),

    #[error("invalid sign assignment: {0}")]
    InvalidSigns(String),
    #[error("truncation order must be at least 2, got {0}")]
    TruncationTooSmall(usize),
    #[error("elements belong to different algebras")]
    MismatchedAlgebra,
    #[error("element is not in the submodule generated by the theta generators")]
    OutsideSubmodule,

    #[error("arrow `{0}` does not lie on a differential cycle")]
    NotDifferentialCycleArrow(String),
    #[error("intermediate quotient order must be at least 1, got {0}")]
    InvalidQuotientOrder(usize),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
