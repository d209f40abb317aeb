use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: lower bounds have {a} entries, upper bounds have {b}")]
    LengthMismatch { a: usize, b: usize },

    #[error("lower bound exceeds upper bound at vertex {index}: {a} > {b}")]
    LowerExceedsUpper { index: usize, a: usize, b: usize },

    #[error("lower bound {a} at vertex {index} exceeds the maximum degree {max} of a simple graph on this many vertices")]
    LowerExceedsMaxDegree { index: usize, a: usize, max: usize },

    #[error("entry {value} at position {index} exceeds {max}")]
    EntryTooLarge {
        index: usize,
        value: usize,
        max: usize,
    },

    #[error("sequence is not non-increasing at position {index}")]
    NotNonIncreasing { index: usize },

    #[error("index {t} out of range 0..={max}")]
    IndexOutOfRange { t: usize, max: usize },

    #[error("bound pair is not in good order at position {index}")]
    NotGoodOrder { index: usize },

    #[error("interval bound {bound} exceeds opposite part size {part}")]
    BoundExceedsPartSize { bound: usize, part: usize },

    #[error("search aborted after {nodes} nodes without a decision")]
    Incomplete { nodes: u64 },

    #[error("instance size {n} exceeds the supported maximum {max}")]
    TooLarge { n: usize, max: usize },

    #[error("unknown criterion `{0}`")]
    UnknownCriterion(String),
}

pub type Result<T> = std::result::Result<T, Error>;
