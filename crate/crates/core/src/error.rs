use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0}")]
    Input(String),
    #[error("syntax error at line {line}, column {column}: {msg}")]
    Syntax { line: usize, column: usize, msg: String },
    #[error("semantic error: {0}")]
    Semantic(String),
    #[error("non-admissible relation: {0}")]
    NonAdmissible(String),
    #[error("cap exceeded at length {0}")]
    CapExceeded(usize),
    #[error("mixed moduli {0} and {1}")]
    ModulusMismatch(u32, u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("field too small: {0}")]
    FieldTooSmall(String),
    #[error("non-split endomorphism; enlarge p")]
    NonSplit,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("falsified: {0}")]
    Falsified(String),
}

impl Error {
    /// Process exit status associated with this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Falsified(_) => 1,
            Error::Budget(_) => 3,
            Error::Inconclusive(_) | Error::NonSplit => 4,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
