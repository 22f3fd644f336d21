use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("pencil is singular")]
    SingularPencil,
    #[error("eigenvalues are not all rational")]
    IrrationalEigenvalues,
    #[error("eigenvalues must be pairwise distinct")]
    DuplicateEigenvalues,
    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("data not generic: {0}")]
    NonGenericData(String),
    #[error("the two equations share a common component")]
    CommonComponent,
    #[error("unsupported dimension n = {0}")]
    UnsupportedDimension(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid pencil: {0}")]
    InvalidPencil(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("self-test failed: {0}")]
    SelfTestFailure(String),
}
