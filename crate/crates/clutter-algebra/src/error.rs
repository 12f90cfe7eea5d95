use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("zero matrix")]
    ZeroMatrix,
    #[error("zero vector")]
    ZeroVector,
    #[error("r = {r} exceeds rank {rank}")]
    RankExceeded { r: usize, rank: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("degenerate configuration")]
    Degenerate,
    #[error("cone has lineality")]
    Lineality,
    #[error("unbounded polyhedron")]
    Unbounded,
    #[error("instance too large: {0}")]
    OverCap(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid clutter: {0}")]
    InvalidClutter(String),
    #[error("{0}")]
    Precondition(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
