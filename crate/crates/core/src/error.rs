use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("linear system is singular")]
    Singular,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("intersection matrix is not negative definite")]
    NotNegativeDefinite,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("invalid boundary: {0}")]
    InvalidBoundary(String),
    #[error("invalid cluster: {0}")]
    InvalidCluster(String),
    #[error("no such point on the current model: {0}")]
    NoSuchPoint(String),
    #[error("configuration is not log smooth: {0}")]
    Unresolved(String),
    #[error("pair is not log canonical")]
    NotLc,
    #[error("germ is not klt")]
    NotKlt,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid rational `{0}`")]
    Rational(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
