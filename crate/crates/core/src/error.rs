use thiserror::Error;

use crate::bounds::BoundId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generators must be positive, found 0")]
    ZeroGenerator,

    #[error("gcd of generators is {gcd}")]
    GcdNotOne { gcd: u32 },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("complement of the gap set is not additively closed: {a} + {b} = {} is a gap", a + b)]
    InvalidGapSet { a: u32, b: u32 },

    #[error("0 cannot be a gap")]
    ZeroGap,

    #[error("S = N has no Frobenius number")]
    IsFullSemigroup,

    #[error("{0} is not an effective generator (a minimal generator above the Frobenius number)")]
    NotEffectiveGenerator(u32),

    #[error("bound {bound} requires embedding dimension 4 or 5, got {embedding_dim}")]
    UnsupportedEmbeddingDim { bound: BoundId, embedding_dim: u32 },

    #[error("no witness atom found for {0}")]
    WitnessNotFound(u32),

    #[error("witness cover and invariants come from different semigroups")]
    MismatchedInputs,

    #[error("genus {genus} exceeds the brute-force cap {cap}")]
    CapExceeded { genus: u32, cap: u32 },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("cannot start worker pool: {0}")]
    ThreadPool(String),

    #[error("cannot parse: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
