use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop {0}-{0} rejected")]
    SelfLoop(u32),
    #[error("duplicate edge {0}-{1} rejected in strict mode")]
    DuplicateEdge(u32, u32),
    #[error("ordering has {ordering} vertices but graph has {graph}")]
    SizeMismatch { graph: usize, ordering: usize },
    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("ordering is not a cocomp ordering: umbrella ({0}, {1}, {2})")]
    NotCocomp(u32, u32, u32),
    #[error("antichain {{{0}}} is not a maximal antichain")]
    NotMaximalAntichain(String),
    #[error("vertex {0} is not an element of the poset induced by the input")]
    UnknownVertex(u32),
    #[error("identical antichains passed where distinct ones are required")]
    IdenticalAntichains,
    #[error("enumeration cap of {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("input too large for brute force: n = {n}, limit {limit}")]
    TooLargeForBruteForce { n: usize, limit: usize },
    #[error("chain is not a maximal chain of the lattice: {0}")]
    ChainNotMaximal(String),
    #[error("leq table does not define a lattice: {0}")]
    NotALattice(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
