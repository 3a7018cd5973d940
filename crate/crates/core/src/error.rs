use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix and path dimensions must be at least 1")]
    ZeroDimension,

    #[error("dimension mismatch: {left}x{left} times {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("not a walk in P_{n}: {reason}")]
    InvalidWalk { n: usize, reason: String },

    #[error("walk length {k} exceeds the enumeration cap {cap}")]
    EnumerationCap { k: usize, cap: usize },

    #[error("walk is {found:?} with respect to pivot {pivot}, expected {expected:?}")]
    WrongClass {
        pivot: usize,
        expected: crate::proofcheck::ClassTag,
        found: crate::proofcheck::ClassTag,
    },

    #[error("reflection maps vertex {from} to {to}, outside 1..={n}")]
    OutOfBounds { from: usize, to: i64, n: usize },

    #[error("walk has no repeated vertex to reflect around")]
    NoRepeatedVertex,

    #[error("walk length {k} is below n = {n}")]
    LengthBelowBound { k: usize, n: usize },

    #[error("{n} is not of the form 2^m - 1")]
    NotMersenne { n: usize },

    #[error("exponent m = {m} is out of the supported range 1..=32")]
    ExponentRange { m: u32 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
