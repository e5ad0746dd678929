use thiserror::Error;

use crate::scalar::ScalarError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("field modes differ")]
    ModeMismatch,
    #[error("real-mode table has a non-real structure constant")]
    RealModeTableWithComplexEntries,
    #[error("table is not associative ({} violating triples)", .0.len())]
    NonAssociative(Vec<(usize, usize, usize)>),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("zero element has no shape")]
    ZeroElement,
    #[error("invariant profile not in catalog: {0}")]
    ProfileNotInCatalog(String),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("degenerate form: det(Q) = 0")]
    DegenerateForm,
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("label {0} exists only over the reals")]
    RealOnlyLabel(String),
    #[error("label {0} needs a family parameter")]
    MissingParameter(String),
    #[error("family parameter is not a Gaussian rational; use the extended table")]
    IrrationalParameter,
    #[error("prime {0} divides a denominator")]
    BadPrime(u64),
    #[error("finite-field oracle: {0}")]
    Oracle(String),
    #[error("document: {0}")]
    Document(String),
}
