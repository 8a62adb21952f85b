use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("codeword length must be at least 1")]
    ZeroLength,

    #[error("weight set is empty")]
    EmptyWeightSet,

    #[error("weight {weight} is outside [0, {n}]")]
    WeightOutOfRange { weight: usize, n: usize },

    #[error("invalid weight range [{low}, {high}] for n = {n}")]
    InvalidRange { low: usize, high: usize, n: usize },

    #[error("prefix of length {len} with {ones} ones is invalid for n = {n}")]
    PrefixOutOfRange { len: usize, ones: usize, n: usize },

    #[error("index {index} is outside the codebook of size {size}")]
    IndexOutOfRange { index: BigUint, size: BigUint },

    #[error("expected {expected} bits, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("codeword weight {weight} is not in the weight set")]
    WeightNotInSet { weight: usize },

    #[error("codeword not in actual codebook")]
    UnusedCodeword,

    #[error("cannot step past the full codeword length {n}")]
    StepPastEnd { n: usize },

    #[error("invalid bit character {0:?}")]
    InvalidBitChar(char),

    #[error("value does not fit in {len} bits")]
    ValueTooWide { len: usize },

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("exact enumeration needs 2^{k} encodes but the budget is 2^{budget}; use Monte-Carlo")]
    EnumerationBudget { k: usize, budget: usize },

    #[error("{0}")]
    InvalidParameter(String),
}
