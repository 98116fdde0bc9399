use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate index {0} in signal")]
    DuplicateIndex(String),

    #[error("operation undefined for the zero signal: {0}")]
    ZeroSignal(&'static str),

    #[error("invalid interval [{lo}, {hi}]: lo must not exceed hi")]
    InvalidInterval { lo: String, hi: String },

    #[error("empty interval collection")]
    EmptyCollection,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("generator produced an empty support: {0}")]
    EmptySupport(String),

    #[error("generator index collision at m={m}: index {index} already used")]
    IndexCollision { m: u64, index: String },

    #[error("could not certify {what} within {max_bits} bits of precision")]
    Uncertified { what: String, max_bits: u32 },

    #[error("range of {0} points exceeds the iteration budget")]
    RangeTooLarge(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
