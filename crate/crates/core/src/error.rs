use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed braid token `{0}`")]
    MalformedToken(String),
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("strand mismatch: expected {expected}, got {actual}")]
    StrandMismatch { expected: usize, actual: usize },
    #[error("unsupported strand count {0}")]
    UnsupportedStrands(usize),
    #[error("matrix is not upper unitriangular: {0}")]
    NotUnitriangular(String),
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("operation requires n = {expected}, collection has n = {actual}")]
    WrongRank { expected: usize, actual: usize },
    #[error("mutation index {index} out of range (n = {n})")]
    MutationIndex { index: usize, n: usize },
    #[error("resource bound exceeded: more than {cap} elements")]
    CapExceeded { cap: usize },
    #[error("cannot derive Hom degree from Euler characteristic {0} at ({1},{2})")]
    UndeterminedDegree(String, usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
}
