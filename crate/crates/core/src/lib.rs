//! Enumeration of minimal multicuts and multiway cuts of undirected graphs.
//!
//! Given a simple connected graph and a set of terminal pairs `B`, a *node
//! multicut* is a set of non-terminal vertices whose removal disconnects
//! every pair in `B`; an *edge multicut* is a set of edges doing the same.
//! When `B` consists of all pairs over a terminal set `T`, the cuts are
//! called *multiway cuts*. This crate enumerates all inclusion-minimal
//! solutions of each kind, streaming them one at a time:
//!
//! * [`multicut::NodeMulticutStream`] — minimal node multicuts, via a
//!   breadth-first traversal of a strongly connected solution graph
//!   (incremental polynomial time).
//! * [`multicut::EdgeMulticutStream`] — minimal edge multicuts, through the
//!   line-graph reduction to the node case.
//! * [`multiway_node::NodeMultiwayStream`] — minimal node multiway cuts,
//!   polynomial delay with an exponential-space visited set.
//! * [`multiway_edge::EdgeMultiwayStream`] — minimal edge multiway cuts, a
//!   reverse-search traversal with polynomial delay and polynomial space
//!   (no visited set at all).
//!
//! Every enumerator is backed by a brute-force [`oracle`] used by the test
//! suite to certify exact agreement on small instances, and by
//! [`steiner`], which cross-checks the hypergraph-transversal reduction for
//! Steiner node multicuts on split graphs.

#![forbid(unsafe_code)]

pub mod error;
pub mod fixtures;
pub mod graph;
pub mod metrics;
pub mod multicut;
pub mod multiway_edge;
pub mod multiway_node;
pub mod oracle;
pub mod separator;
pub mod solution;
pub mod steiner;

pub use error::{Error, Result};
pub use graph::{EdgeSet, Graph, VertexSet};
pub use solution::{CutSolution, OrderedTerminals, PairTerminals, TerminalSpec};
