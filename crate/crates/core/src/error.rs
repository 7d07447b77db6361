use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cover relations contain a cycle through elements {0} and {1}")]
    CycleDetected(usize, usize),
    #[error("element index {index} outside 1..={d}")]
    IndexOutOfRange { index: usize, d: usize },
    #[error("poset size {0} is unsupported (must be 1..=64)")]
    UnsupportedSize(usize),
    #[error("subset is not a poset ideal")]
    NotAnIdeal,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("posets have no common linear extension")]
    NoCommonLinearExtension,
    #[error("empty point set")]
    EmptyInput,
    #[error("polytope has dimension {dim} in ambient dimension {ambient}")]
    NotFullDimensional { dim: usize, ambient: usize },
    #[error("search budget of {budget} exceeded")]
    SearchBudgetExceeded { budget: u64 },
    #[error("budget of {budget} exceeded: {what}")]
    BudgetExceeded { what: String, budget: u64 },
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
