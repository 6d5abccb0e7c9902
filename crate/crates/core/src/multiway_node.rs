//! Polynomial-delay enumeration of minimal node multiway cuts.
//!
//! The solution graph connects a minimal cut M to `comp(M^{i,v})` for every
//! terminal index i and cut vertex v not adjacent to a foreign terminal,
//! where `M^{i,v}` releases v toward the component of `t_i` and adds back
//! v's neighbors in every other terminal component. Each neighborhood has
//! at most k·n members and moving toward any other solution strictly
//! decreases the componentwise distance, so a breadth-first traversal with
//! a visited dictionary emits every solution exactly once with O(knm)
//! work per output. The dictionary is the deliberate exponential-space
//! trade; the edge variant in [`crate::multiway_edge`] avoids it.

use std::collections::{HashSet, VecDeque};

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::solution::{
    comp_minimalize_multiway, terminal_components, vertex_set_key, OrderedTerminals,
    TerminalComponents,
};

/// A minimal node multiway cut together with its terminal components,
/// kept so neighbor generation never recomputes them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiwaySolution {
    pub cut: VertexSet,
    pub family: TerminalComponents,
}

/// The shifted cut `M^{i,v}`: v leaves the cut toward block i, and v's
/// neighbors in every other terminal component enter it. Returns `None`
/// when v is adjacent to a terminal other than `t_i` (the move would
/// reconnect two terminals).
pub fn shift_candidate(
    g: &Graph,
    spec: &OrderedTerminals,
    sol: &MultiwaySolution,
    i: usize,
    v: u32,
) -> Option<VertexSet> {
    debug_assert!(sol.cut.contains(v));
    let foreign = g
        .neighbors(v)
        .iter()
        .any(|&u| spec.contains(u) && u != spec.get(i));
    if foreign {
        return None;
    }
    let mut shifted: Vec<u32> = sol.cut.iter().filter(|&u| u != v).collect();
    for (j, block) in sol.family.blocks().iter().enumerate() {
        if j == i {
            continue;
        }
        shifted.extend(
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&u| block.contains(u)),
        );
    }
    Some(VertexSet::new(shifted))
}

/// All minimalized shift candidates of `sol`: at most k·n entries.
pub fn neighborhood_multiway_node(
    g: &Graph,
    spec: &OrderedTerminals,
    sol: &MultiwaySolution,
) -> Vec<MultiwaySolution> {
    let k = spec.k();
    let mut out = Vec::new();
    for v in &sol.cut {
        // The guard depends only on v's terminal neighbors: two or more
        // foreign terminals block every i, exactly one allows only its own
        // index, none allows all of them.
        let terminal_neighbors: Vec<u32> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| spec.contains(u))
            .collect();
        let allowed: Vec<usize> = match terminal_neighbors.len() {
            0 => (0..k).collect(),
            1 => spec.index_of(terminal_neighbors[0]).into_iter().collect(),
            _ => Vec::new(),
        };
        for i in allowed {
            let shifted = match shift_candidate(g, spec, sol, i, v) {
                Some(s) => s,
                None => continue,
            };
            let cut = comp_minimalize_multiway(g, spec, &shifted)
                .expect("shift candidates are multiway cuts");
            let family = terminal_components(g, spec, &cut)
                .expect("minimalized cuts separate all terminals");
            out.push(MultiwaySolution { cut, family });
        }
    }
    out
}

/// Streaming breadth-first traversal over the multiway solution graph.
/// Emits each cut when its queue entry is dequeued; the expansion of the
/// previous output is deferred into the following `next()` call so the
/// inter-output work is exactly one neighborhood computation.
pub struct NodeMultiwayStream {
    graph: Graph,
    spec: OrderedTerminals,
    feasible: bool,
    queue: VecDeque<MultiwaySolution>,
    visited: HashSet<Vec<u8>>,
    to_expand: Option<MultiwaySolution>,
    started: bool,
}

impl NodeMultiwayStream {
    pub fn new(g: &Graph, spec: &OrderedTerminals) -> Result<Self> {
        spec.validate_for(g)?;
        let feasible = !g
            .edges()
            .iter()
            .any(|&(u, v)| spec.contains(u) && spec.contains(v));
        Ok(NodeMultiwayStream {
            graph: g.clone(),
            spec: spec.clone(),
            feasible,
            queue: VecDeque::new(),
            visited: HashSet::new(),
            to_expand: None,
            started: false,
        })
    }

    /// True when two terminals are adjacent, so no node multiway cut
    /// exists.
    pub fn is_infeasible(&self) -> bool {
        !self.feasible
    }

    /// Retained-state estimate in bytes, for the instrumentation output.
    pub fn retained_bytes_estimate(&self) -> usize {
        let keys: usize = self.visited.iter().map(|k| k.len()).sum();
        let queued: usize = self.queue.iter().map(|s| 4 * s.cut.len()).sum();
        keys + queued
    }
}

impl Iterator for NodeMultiwayStream {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if !self.started {
            self.started = true;
            if !self.feasible {
                return None;
            }
            let all: VertexSet = self
                .graph
                .vertices()
                .filter(|&v| !self.spec.contains(v))
                .collect();
            let cut = comp_minimalize_multiway(&self.graph, &self.spec, &all)
                .expect("non-adjacent terminals admit the all-non-terminals cut");
            let family = terminal_components(&self.graph, &self.spec, &cut)
                .expect("initial cut separates all terminals");
            let sol = MultiwaySolution { cut, family };
            self.visited.insert(vertex_set_key(&sol.cut));
            self.queue.push_back(sol);
        }
        if let Some(prev) = self.to_expand.take() {
            for nb in neighborhood_multiway_node(&self.graph, &self.spec, &prev) {
                let key = vertex_set_key(&nb.cut);
                if self.visited.insert(key) {
                    self.queue.push_back(nb);
                }
            }
        }
        let sol = self.queue.pop_front()?;
        let out = sol.cut.clone();
        self.to_expand = Some(sol);
        Some(out)
    }
}

/// Starts the minimal node multiway cut enumeration for `(g, terminals)`.
pub fn enumerate_minimal_node_multiway(
    g: &Graph,
    spec: &OrderedTerminals,
) -> Result<NodeMultiwayStream> {
    NodeMultiwayStream::new(g, spec)
}
