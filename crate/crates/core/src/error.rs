//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid root system: {family}{rank}")]
    InvalidSystem { family: String, rank: usize },

    #[error("multiplicity pattern assigns unknown root class (squared length {0})")]
    UnknownRootClass(i64),

    #[error("multiplicity pattern leaves root class unassigned (squared length {0})")]
    UnassignedRootClass(i64),

    #[error("root index {0} is not a positive root")]
    NotPositiveRoot(usize),

    #[error("index set is not closed under negation")]
    NotNegationClosed,

    #[error("{what} exceeded resource ceiling: reached {reached}, limit {limit}")]
    ResourceCeiling {
        what: &'static str,
        reached: usize,
        limit: usize,
    },

    #[error("unrecognized irreducible component: rank {rank}, {count} roots")]
    UnrecognizedComponent { rank: usize, count: usize },

    #[error("operation requires all multiplicities equal to one")]
    MultiplicityNotOne,

    #[error("malformed witness: {0}")]
    MalformedWitness(String),

    #[error("unknown symmetric space label: {0}")]
    UnknownSpace(String),

    #[error("space {0} has no multiplicity data; cannot compute")]
    MultiplicitiesUnavailable(String),

    #[error("unknown annihilator type {token:?} in {system}")]
    UnknownAnnihilator { system: String, token: String },

    #[error("unknown report format: {0}")]
    UnknownFormat(String),

    #[error("orbit cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
