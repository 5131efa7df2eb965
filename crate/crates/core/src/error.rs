use thiserror::Error;

/// Error from the algebra DSL or module expression parsers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: reference to undeclared vertex `{name}`")]
    UnknownVertex { line: usize, name: String },
    #[error("line {line}: reference to undeclared arrow `{name}`")]
    UnknownArrow { line: usize, name: String },
    #[error("line {line}: duplicate arrow name `{name}`")]
    DuplicateArrow { line: usize, name: String },
    #[error("line {line}: duplicate vertex name `{name}`")]
    DuplicateVertex { line: usize, name: String },
    #[error("line {line}: relation `{path}` is not a composable path")]
    NonComposableRelation { line: usize, path: String },
    #[error("{0}")]
    Expr(String),
}

/// A violated gentle axiom together with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    /// "G1", "G2", "G3", "G4" or "FIN" (finite-dimensionality).
    pub axiom: &'static str,
    pub witness: String,
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}) {}", self.axiom, self.witness)
    }
}

/// Domain-level failure of an operation precondition.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DomainError {
    #[error("algebra is not gentle: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    NotGentle(Vec<AxiomViolation>),
    #[error("sign functions are inconsistent: {0}")]
    SignInconsistency(String),
    #[error("invalid string word: {0}")]
    InvalidWord(String),
    #[error("module is {0}, operation requires otherwise")]
    WrongProjInj(String),
    #[error("Ext dimension is {found}, expected 1")]
    ExtDimension { found: usize },
    #[error("unsupported module pair: {0}")]
    Unsupported(String),
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("{0}")]
    Other(String),
}

/// Top-level error type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] DomainError),
}

impl Error {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 1,
            Error::Domain(DomainError::NotGentle(_)) => 1,
            Error::Domain(DomainError::InvalidWord(_)) => 1,
            Error::Domain(DomainError::InvalidTriangulation(_)) => 1,
            Error::Domain(DomainError::Unsupported(_)) => 3,
            Error::Domain(_) => 2,
        }
    }
}
