use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation needs a nonempty partition")]
    EmptyPartition,
    #[error("shape {inner} is not contained in {outer}")]
    ShapeNotContained { inner: String, outer: String },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("set mixes partitions of different sizes")]
    MixedSizes,
    #[error("cannot parse partition: {0}")]
    Parse(String),
    #[error("part {0} exceeds the supported maximum of 255")]
    PartTooLarge(usize),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("negative multiplicity {value} for {context}")]
    NegativeResult { value: i64, context: String },
    #[error("non-integral result for {0}")]
    NonIntegerResult(String),
    #[error("scale bound exceeded: {what} = {value} > {bound}")]
    ScaleExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("arity {n} does not divide |mu| = {size}")]
    ArityError { size: usize, n: usize },
    #[error("{0} is not a hook")]
    NotAHook(String),
    #[error("theorem check failed: {0}")]
    TheoremViolated(String),
    #[error("sequence not constant on the last {window} terms")]
    NotStabilized { window: usize },
    #[error("cache file {path}: {reason}")]
    CacheCorrupt { path: String, reason: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
