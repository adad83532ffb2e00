use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid Hessenberg function: {0}")]
    InvalidHessenberg(String),

    #[error("position out of range: ({i}, {j}) for n = {n}")]
    PositionOutOfRange { i: usize, j: usize, n: usize },

    #[error("{0} is not h-admissible")]
    NotAdmissible(Permutation),

    #[error("{u} is not in the Bruhat interval [{w}, w0]")]
    NotInInterval { u: Permutation, w: Permutation },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("n = {n} exceeds the configured cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("unsupported root system: {0}")]
    UnsupportedRootSystem(String),

    #[error("invalid root: {0}")]
    InvalidRoot(String),

    #[error("not a Hessenberg space: {0}")]
    InvalidHessenbergSpace(String),

    #[error("not of Weyl type: {0}")]
    NotWeylType(String),

    #[error("class vector does not match the graph's vertex set")]
    DomainMismatch,

    #[error("sign propagation failed: {0}")]
    SignInconsistency(String),

    #[error("unknown sweep suite: {0}")]
    UnknownSuite(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
