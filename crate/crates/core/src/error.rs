use thiserror::Error;

/// Errors raised by the group engine, the constructors and the claim suites.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element id {id} out of range for group of order {order}")]
    ElementOutOfRange { id: usize, order: usize },

    #[error("element set of size {size} is not a subgroup")]
    NotSubgroup { size: usize },

    #[error("subgroup of order {size} is not normal")]
    NotNormal { size: usize },

    #[error("{p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("group of order {order} exceeds the engine capacity {cap}")]
    Capacity { order: u64, cap: usize },

    #[error("{0} is not squarefree")]
    NotSquarefree(u64),

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("gcd({t}, {modulus}) != 1")]
    NotUnit { t: u64, modulus: u64 },

    #[error("orders {0} and {1} are not coprime")]
    NotCoprime(u64, u64),

    #[error("unknown claim or equation id {0:?}")]
    UnknownId(String),

    #[error("scan bound {0} could overflow exact arithmetic")]
    BoundTooLarge(u64),

    #[error("{0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
