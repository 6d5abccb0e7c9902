//! Polynomial-delay enumeration of all minimal a-b vertex separators.
//!
//! A vertex set S is a minimal a-b separator exactly when the components of
//! a and b in G - S both have neighborhood equal to all of S (the
//! full-component characterization). The enumerator is a breadth-first
//! traversal of a supergraph over separators: the start separator is the
//! one whose a-side component is smallest, and each neighbor is obtained by
//! pushing the a-side component past one separator vertex v — take
//! X = C_a ∪ {v}, remove N(X), and re-minimalize toward b by taking the
//! neighborhood of b's remaining component. Every push keeps both sides
//! full, and pushing toward any target separator strictly shrinks the
//! disagreement with its a-side, so the traversal reaches every minimal
//! separator exactly once.
//!
//! The stream is lazy: constructing it costs one component computation, and
//! each `next()` performs at most one node expansion of the traversal.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solution::vertex_set_key;

/// An a-b separator enumeration instance. `a` and `b` must be distinct;
/// separators only exist when they are non-adjacent, which is checked when
/// the enumeration starts.
#[derive(Clone, Debug)]
pub struct SeparatorInstance {
    graph: Graph,
    a: u32,
    b: u32,
}

impl SeparatorInstance {
    pub fn new(graph: Graph, a: u32, b: u32) -> Result<Self> {
        if a as usize >= graph.n() {
            return Err(Error::VertexOutOfRange(a, graph.n()));
        }
        if b as usize >= graph.n() {
            return Err(Error::VertexOutOfRange(b, graph.n()));
        }
        if a == b {
            return Err(Error::TerminalSpec(
                "separator endpoints must differ".into(),
            ));
        }
        Ok(SeparatorInstance { graph, a, b })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// Full-component test: `s` separates a from b and both of their
    /// components have neighborhood exactly `s`.
    pub fn is_minimal_ab_separator(&self, s: &VertexSet) -> bool {
        if s.contains(self.a) || s.contains(self.b) {
            return false;
        }
        let blocked = self.graph.blocked_mask(s);
        let comp_a = VertexSet::from_sorted(self.graph.bfs_from(self.a, &blocked));
        if comp_a.contains(self.b) {
            return false;
        }
        let comp_b = VertexSet::from_sorted(self.graph.bfs_from(self.b, &blocked));
        self.graph.neighbors_of_set(&comp_a) == *s && self.graph.neighbors_of_set(&comp_b) == *s
    }

    pub fn enumerate(&self) -> Result<SeparatorStream> {
        enumerate_minimal_ab_separators(self)
    }
}

/// Spec-level alias for [`SeparatorInstance::is_minimal_ab_separator`].
pub fn is_minimal_ab_separator(inst: &SeparatorInstance, s: &VertexSet) -> bool {
    inst.is_minimal_ab_separator(s)
}

/// Starts the lazy stream of all minimal a-b separators, each emitted
/// exactly once in a deterministic order. Fails when a and b are adjacent.
pub fn enumerate_minimal_ab_separators(inst: &SeparatorInstance) -> Result<SeparatorStream> {
    let (graph, a, b) = (inst.graph.clone(), inst.a, inst.b);
    if graph.has_edge(a, b) {
        return Err(Error::NoSeparator(a, b));
    }

    // Separator closest to a: push b's component against N(a) and take its
    // neighborhood. Its a-side is contained in the a-side of every minimal
    // separator, which makes it the right traversal start.
    let na: VertexSet = graph.neighbors(a).iter().copied().collect();
    let blocked = graph.blocked_mask(&na);
    let comp_b = VertexSet::from_sorted(graph.bfs_from(b, &blocked));
    let first = graph.neighbors_of_set(&comp_b);

    let mut stream = SeparatorStream {
        graph,
        a,
        b,
        queue: VecDeque::new(),
        visited: HashSet::new(),
        pending: VecDeque::new(),
    };
    stream.visited.insert(vertex_set_key(&first));
    stream.queue.push_back(first.clone());
    stream.pending.push_back(first);
    Ok(stream)
}

/// Lazy breadth-first stream over the separator supergraph.
pub struct SeparatorStream {
    graph: Graph,
    a: u32,
    b: u32,
    queue: VecDeque<VertexSet>,
    visited: HashSet<Vec<u8>>,
    pending: VecDeque<VertexSet>,
}

impl SeparatorStream {
    /// Pushes the a-side past `v`: the next separator is the neighborhood
    /// of b's component after removing N(C_a ∪ {v}).
    fn push_past(&self, comp_a: &VertexSet, v: u32) -> VertexSet {
        let x = comp_a.with(v);
        let hull = self.graph.neighbors_of_set(&x);
        let blocked = self.graph.blocked_mask(&hull);
        let comp_b = VertexSet::from_sorted(self.graph.bfs_from(self.b, &blocked));
        self.graph.neighbors_of_set(&comp_b)
    }

    fn expand(&mut self, s: &VertexSet) {
        let blocked = self.graph.blocked_mask(s);
        let comp_a = VertexSet::from_sorted(self.graph.bfs_from(self.a, &blocked));
        let mut batch: Vec<VertexSet> = Vec::new();
        for v in s {
            // A neighbor of b can never move to the a-side.
            if self.graph.has_edge(v, self.b) {
                continue;
            }
            let next = self.push_past(&comp_a, v);
            if !self.visited.contains(&vertex_set_key(&next)) && !batch.contains(&next) {
                batch.push(next);
            }
        }
        batch.sort_by_key(vertex_set_key);
        for s2 in batch {
            self.visited.insert(vertex_set_key(&s2));
            self.queue.push_back(s2.clone());
            self.pending.push_back(s2);
        }
    }

    /// Retained-state estimate in bytes, for the instrumentation output.
    pub fn retained_bytes_estimate(&self) -> usize {
        let key_bytes: usize = self.visited.iter().map(|k| k.len()).sum();
        let queue_bytes: usize = self.queue.iter().map(|s| 4 * s.len()).sum();
        key_bytes + queue_bytes
    }
}

impl Iterator for SeparatorStream {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            if let Some(s) = self.pending.pop_front() {
                return Some(s);
            }
            let s = self.queue.pop_front()?;
            self.expand(&s);
        }
    }
}
