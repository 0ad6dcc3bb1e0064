use thiserror::Error;

use crate::partitions::Partition;

/// Errors raised by the constructions in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<u32>),

    #[error("cannot parse partition {input:?}: {reason}")]
    ParsePartition { input: String, reason: String },

    #[error("partition ({partition}) has maximal hook length >= {n}, so it is not in Y_{n}")]
    NotInYN { partition: Partition, n: usize },

    #[error("partition ({partition}) is not in the central band set Y_{n}°")]
    NotInYNCirc { partition: Partition, n: usize },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("band index m={m} must satisfy 1 <= m <= {k} for N={n}")]
    BadBandIndex { n: usize, m: usize, k: usize },

    #[error("N={0} has the wrong parity for this operation")]
    BadParity(usize),

    #[error("N must be at least {min}, got {n}")]
    TooSmall { n: usize, min: usize },

    #[error("invalid rim: {0}")]
    InvalidRim(String),

    #[error("no (delta, epsilon) parameters for ({partition}) in Y_{n}°")]
    ParameterizationFailure { partition: Partition, n: usize },

    #[error("the rim system of ({partition}) is singular for N={n}")]
    SingularSystem { partition: Partition, n: usize },

    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("metric has {n} points, above the exhaustive cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("invalid metric: {0}")]
    InvalidMetric(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
