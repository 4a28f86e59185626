use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element index {index} out of range for ground set of {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("relation digraph has a cycle: {}", format_cycle(.0))]
    CycleDetected(Vec<usize>),

    #[error("sequence is not a permutation of 0..{n}")]
    NotAPermutation { n: usize },

    #[error("order violates relation {below} < {above}")]
    NotAnExtension { below: usize, above: usize },

    #[error("linear extension count exceeds cap {cap}")]
    CountExceeded { cap: u64 },

    #[error("search node cap {cap} exceeded")]
    SearchCapExceeded { cap: u64 },

    #[error("ground set mismatch: {left} vs {right}")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("invalid chain partition: {0}")]
    InvalidChainPartition(String),

    #[error("invalid realizer: {0}")]
    InvalidRealizer(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("poset file error: {0}")]
    File(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn format_cycle(cycle: &[usize]) -> String {
    cycle
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" -> ")
}
