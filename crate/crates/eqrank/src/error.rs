//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EqRankError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("partition does not match graph: {0}")]
    PartitionMismatch(String),

    #[error("operation requires an acyclic graph but the input contains a cycle")]
    CyclicGraph,

    #[error("graph has {size} vertices, above the exhaustive-computation limit of {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("no block has at least {f_cut} members (largest has {largest}); lower the cutoff")]
    CutoffTooHigh { f_cut: usize, largest: usize },

    #[error("empty input: {0}")]
    EmptyInput(String),
}

pub type Result<T> = std::result::Result<T, EqRankError>;
