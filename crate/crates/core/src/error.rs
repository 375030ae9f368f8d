use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type {family}{rank}: {reason}")]
    InvalidType {
        family: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("simple reflection index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("{0:?} is not a coroot of the system")]
    NotACoroot(Vec<i64>),

    #[error("Weyl group of order {order} exceeds the configured cap {cap}")]
    CapExceeded { order: u128, cap: u128 },

    #[error("weight {0:?} is not anti-dominant")]
    NotAntiDominant(Vec<i64>),

    #[error("affine coroot has zero real part")]
    ZeroRealPart,

    #[error("not a beta sequence: {0}")]
    NotABetaSequence(String),

    #[error("convention violation: {0}")]
    Convention(String),

    #[error("{0} is not a cominuscule index")]
    NotCominuscule(usize),

    #[error("the two t=infinity routes disagree\nword route:     {word}\nreversed route: {reversed}")]
    RouteMismatch { word: String, reversed: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
