//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group spec `{0}`: {1}")]
    InvalidSpec(String, String),

    #[error("unknown named group `{0}`")]
    UnknownNamed(String),

    #[error("malformed cycle string `{0}`: {1}")]
    CycleParse(String, String),

    #[error("group order {order} exceeds the configured bound {bound}")]
    OrderBound { order: String, bound: u64 },

    #[error("element of degree {got} does not act on {expected} points")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("element is not a member of the group")]
    NotAMember,

    #[error("subgroup is not normal: conjugate of a generator escapes")]
    NotNormal,

    #[error("tables are inconsistent: {0}")]
    TableMismatch(String),

    #[error("character table defect: {0}")]
    TableDefect(String),

    #[error("row index {0} out of range")]
    RowIndex(usize),

    #[error("expression parse error at byte {pos}: {msg}")]
    ExprParse { pos: usize, msg: String },

    #[error("witness file parse error on line {line}: {msg}")]
    WitnessParse { line: usize, msg: String },

    #[error("non-integral value where an exact integer was required: {0}")]
    NonIntegral(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
