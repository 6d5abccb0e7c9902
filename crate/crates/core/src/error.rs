use thiserror::Error;

/// Errors shared by the graph, solution, and enumeration modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph format error: {0}")]
    GraphFormat(String),

    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(u32, usize),

    #[error("input graph is disconnected")]
    Disconnected,

    #[error("induced subgraph is disconnected")]
    InducedDisconnected,

    #[error("terminal spec error: {0}")]
    TerminalSpec(String),

    #[error("cut contains terminal {0}")]
    TerminalInCut(u32),

    #[error("vertex set is not a multicut: a component contains a full terminal pair")]
    NotAMulticut,

    #[error("vertex set is not a multiway cut: two terminals remain connected")]
    NotAMultiwayCut,

    #[error("{0} and {1} are adjacent: no separator exists")]
    NoSeparator(u32, u32),

    #[error("no terminal pair inside the candidate subgraph")]
    NoPairInSubgraph,

    #[error("the root partition has no pivot")]
    RootPartition,

    #[error("mismatched component family sizes: {0} vs {1}")]
    FamilySizeMismatch(usize, usize),

    #[error("oracle universe of {0} candidates exceeds the guard of 2^{1} subsets")]
    OracleGuard(usize, u32),

    #[error("hypergraph error: {0}")]
    Hypergraph(String),
}

pub type Result<T> = std::result::Result<T, Error>;
