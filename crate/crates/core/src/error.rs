use thiserror::Error;

use crate::roots::Family;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system {family}{rank}: {reason}")]
    InvalidSystem {
        family: Family,
        rank: usize,
        reason: String,
    },

    #[error("node {node} is not a node of {family}{rank}")]
    InvalidNode {
        family: Family,
        rank: usize,
        node: usize,
    },

    #[error("weight has {got} coordinates, expected {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("{0} is not a root")]
    NotARoot(String),

    #[error("{family}{rank}({node}) is not of quasi-Heisenberg type")]
    NotQuasiHeisenberg {
        family: Family,
        rank: usize,
        node: usize,
    },

    #[error("type A has no unique simple root attached to the highest root")]
    TypeA,

    #[error(
        "{family}{rank}({node}): Levi factor has {factors} simple ideals (only D_n(n-2) does this)"
    )]
    ThreeFactorLevi {
        family: Family,
        rank: usize,
        node: usize,
        factors: usize,
    },

    #[error("extreme weight is not unique: {0} candidates")]
    NonUniqueExtreme(usize),

    #[error("no constituent data for {0}")]
    NoData(String),

    #[error("constituent {kind} of {label} fails validation: {reason}")]
    InvalidConstituent {
        label: String,
        kind: String,
        reason: String,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
