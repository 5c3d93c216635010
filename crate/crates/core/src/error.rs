use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot add q^{0}·f and q^{1}·g: exponent offsets differ by a non-half-integer")]
    IncommensurableOffsets(String, String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("braid parse error at token {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("relation table incomplete: no rule for powers ({0}, {1}, {2})")]
    MissingRule(usize, usize, usize),
    #[error("symbolic evaluation supports n <= 3 only (got n = {0})")]
    SymbolicRankTooLarge(usize),
    #[error("braid is not balanced for colors {0}")]
    Unbalanced(String),
    #[error("annular evaluation exceeded depth bound {0}")]
    DepthExceeded(usize),
    #[error("{0}")]
    Usage(String),
}
