use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("path must contain at least one sample")]
    EmptyPath,
    #[error("sample times must be strictly increasing (violated at index {index})")]
    NonMonotoneTimes { index: usize },
    #[error("times and values differ in length ({times} vs {values})")]
    LengthMismatch { times: usize, values: usize },
    #[error("non-finite sample at index {index}")]
    NonFiniteValue { index: usize },
    #[error("interval [{c}, {d}] is not inside the path span [{a}, {b}]")]
    OutOfSpan { c: f64, d: f64, a: f64, b: f64 },
    #[error("interval [{c}, {d}] is empty")]
    EmptyInterval { c: f64, d: f64 },
    #[error("count {count} is below the minimum {min}")]
    BadCount { count: usize, min: usize },
    #[error("exponent p = {p} is invalid: {reason}")]
    BadExponent { p: f64, reason: &'static str },
    #[error(
        "exponents (p, q) = ({p}, {q}) are outside the Young regime 1/p + 1/q > 1 with p, q > 1"
    )]
    BadExponents { p: f64, q: f64 },
    #[error("exponents must satisfy q > p >= 1, got p = {p}, q = {q}")]
    BadExponentOrder { p: f64, q: f64 },
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("truncation level must be non-negative, got {0}")]
    NegativeDelta(f64),
    #[error("truncation level must be positive, got {0}")]
    NonPositiveDelta(f64),
    #[error("increment at index {index} is negative or non-finite")]
    NegativeIncrement { index: usize },
    #[error("input of size {len} exceeds the enumeration limit {max}")]
    TooLarge { len: usize, max: usize },
    #[error("paths do not share a time span")]
    SpanMismatch,
    #[error("integrand and integrator jump at the same time t = {time}")]
    CommonDiscontinuity { time: f64 },
    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence {
        what: &'static str,
        iterations: usize,
    },
    #[error(
        "ladder does not start at the required level: declared {declared}, expected {expected}"
    )]
    LadderMismatch { declared: f64, expected: f64 },
    #[error("ladder is not a non-increasing sequence of non-negative levels: {0}")]
    NonMonotoneLadder(String),
    #[error("Holder exponent must lie in (0, 1), got {0}")]
    BadAlpha(f64),
    #[error("no sample-aligned window keeps the seminorm below {eps}")]
    NoSplitting { eps: f64 },
    #[error("solution exceeded the blow-up guard near t = {time}")]
    BlowupSuspected { time: f64 },
    #[error("paths use different interpolation modes")]
    MixedModes,
    #[error("malformed CSV input: {0}")]
    Csv(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
