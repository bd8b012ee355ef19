use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("left-normed commutator of an empty list")]
    EmptyCommutator,
    #[error("generator count mismatch: {0} vs {1}")]
    GeneratorCountMismatch(usize, usize),
    #[error("{what} out of range: {value} (allowed {allowed})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        allowed: String,
    },
    #[error("matrix size mismatch: {0}x{0} vs {1}x{1}")]
    SizeMismatch(usize, usize),
    #[error("size cap exceeded: {what} = {value} > {cap}")]
    SizeCap {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("dimension guardrail exceeded: {dim} > {cap}")]
    DimensionGuardrail { dim: usize, cap: usize },
    #[error("invalid structure constants: {0}")]
    InvalidAlgebra(String),
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("element does not belong to this backend: {0}")]
    BackendMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("exponent overflow: {0}")]
    ExponentOverflow(String),
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("in cell ({row}, {col}): {source}")]
    Cell {
        row: usize,
        col: usize,
        source: Box<Error>,
    },
    #[error("invalid backend spec `{0}`")]
    InvalidBackend(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("json: {0}")]
    Json(String),
}
