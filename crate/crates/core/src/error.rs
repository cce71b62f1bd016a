use thiserror::Error;

use crate::cube::VertexSet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A size parameter (ground size, binomial row, ...) outside its supported range.
    #[error("{what} = {value} is out of range (expected {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    /// A rank at or beyond the number of objects being ranked.
    #[error("rank {rank} is out of range (only {bound} objects)")]
    RankOutOfRange { rank: u64, bound: u64 },

    #[error("vertex {vertex} is not a subset of [{n}]")]
    InvalidVertex { vertex: VertexSet, n: u32 },

    #[error("family mixes even and odd sets")]
    MixedParity,

    #[error("family is not independent: {a} and {b} are adjacent")]
    NotIndependent { a: VertexSet, b: VertexSet },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("exact arithmetic overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn out_of_range(what: &'static str, value: u64, min: u64, max: u64) -> Self {
        Error::OutOfRange {
            what,
            value,
            min,
            max,
        }
    }
}
