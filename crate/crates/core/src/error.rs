use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("not an involutive residuated lattice: {0}")]
    NotAnIrl(String),
    #[error("not a De Morgan monoid: {0}")]
    NotDmm(String),
    #[error("algebra is not finitely subdirectly irreducible")]
    NotFsi,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("unknown algebra name `{0}`")]
    UnknownName(String),
    #[error("syntax error at position {position}: expected one of {}", expected.join(", "))]
    Syntax { position: usize, expected: Vec<String> },
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("statement has {found} variables, limit is {limit}")]
    TooManyVariables { found: usize, limit: usize },
    #[error("not a deductive filter: {0}")]
    NotAFilter(String),
    #[error("not a congruence: {0}")]
    NotACongruence(String),
    #[error("not a subuniverse: {0}")]
    NotASubuniverse(String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("size {size} exceeds the configured maximum {max} (use --unsafe-size)")]
    SizeTooLarge { size: usize, max: usize },
    #[error("catalog is incomplete or empty")]
    IncompleteCatalog,
    #[error("the algebra is trivial")]
    TrivialAlgebra,
    #[error("invalid relevant algebra: {0}")]
    NotARelevantAlgebra(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
