use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graphs must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("Turán graph T({n},{t}) needs 1 <= t <= n")]
    InvalidTuran { n: usize, t: usize },
    #[error("clique size must be at least 1")]
    ZeroCliqueSize,
    #[error("graph contains a clique of size {size}; expected K{forbidden}-free")]
    CliqueTooLarge { size: usize, forbidden: usize },
    #[error("greedy sequence entry {entry} at position {index} is invalid: {reason}")]
    InvalidSequence {
        index: usize,
        entry: u8,
        reason: &'static str,
    },
    #[error("(m = {m}, q = {q}) is not consistent with an irreducible sequence of type {kind}")]
    InconsistentType { kind: u8, m: i64, q: i64 },
    #[error("parameter out of range: {0}")]
    OutOfRange(&'static str),
    #[error("count k_{t} is zero, ratio undefined")]
    ZeroCount { t: usize },
    #[error("{0}")]
    InvalidPartition(&'static str),
}
