use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("b_{index} = {value} is not an integer")]
    NonIntegerB { index: usize, value: BigRational },

    #[error("b_{index} = {value} is negative")]
    NegativeB { index: usize, value: BigInt },

    #[error("family `{0}` has no linear recurrence")]
    NoRecurrenceForFamily(&'static str),

    #[error("no closed form for {0}")]
    NoClosedForm(String),

    #[error("closed form did not evaluate to an integer: {0}")]
    NonIntegerResult(String),

    #[error("quadratic numbers over different rings: sqrt({left}) vs sqrt({right})")]
    MismatchedRing { left: BigInt, right: BigInt },

    #[error("{0} has no inverse in its quadratic ring")]
    NotInvertible(String),

    #[error("invalid quadratic ring base {0}: must be 1 or a positive non-square")]
    InvalidRing(BigInt),

    #[error("oracle limit exceeded: n = {n} > {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("bad parameter `{name}`: {reason}")]
    BadParameter { name: String, reason: String },

    #[error("malformed b-file line {line}: {content:?}")]
    MalformedLine { line: usize, content: String },

    #[error("b-file line {line}: expected index {expected}, found {found}")]
    NonContiguousIndex {
        line: usize,
        expected: i64,
        found: i64,
    },

    #[error("{method} disagrees with the convolution at n = {n}: {got} vs {expected}")]
    MethodDisagreement {
        method: &'static str,
        n: usize,
        got: BigInt,
        expected: BigInt,
    },

    #[error("{path}: {message}")]
    Fixture { path: String, message: String },

    #[error("fixture {oeis_id} has {available} aligned terms, {required} required")]
    InsufficientFixture {
        oeis_id: String,
        available: usize,
        required: usize,
    },
}

impl Error {
    pub(crate) fn bad_param(name: &str, reason: impl Into<String>) -> Self {
        Error::BadParameter {
            name: name.to_string(),
            reason: reason.into(),
        }
    }
}
