//! Immutable simple undirected graphs and the structural primitives the
//! enumerators are built on: component extraction under vertex/edge
//! deletions, set neighborhoods, articulation points, contraction, and the
//! line-graph terminal expansion that turns edge multicuts into node
//! multicuts.
//!
//! Vertices are dense integers `0..n`. Edges are unordered pairs stored as
//! `(min, max)`; this canonical ordering is what the tie-breaking rules and
//! duplicate detection elsewhere rely on.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::metrics;
use crate::solution::PairTerminals;

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<u32>);

impl VertexSet {
    pub fn new(mut vertices: Vec<u32>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSet(vertices)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// Wraps a vector that is already sorted and duplicate-free.
    pub(crate) fn from_sorted(vertices: Vec<u32>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        VertexSet(vertices)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn min_vertex(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn with(&self, v: u32) -> Self {
        if self.contains(v) {
            return self.clone();
        }
        let mut out = self.0.clone();
        let pos = out.partition_point(|&u| u < v);
        out.insert(pos, v);
        VertexSet(out)
    }

    pub fn without(&self, v: u32) -> Self {
        VertexSet(self.0.iter().copied().filter(|&u| u != v).collect())
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Self::new(out)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
        )
    }

    pub fn difference(&self, other: &Self) -> Self {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        )
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        self.0.iter().all(|&v| !other.contains(v))
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = u32;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, u32>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// A sorted set of unordered edges, each stored as `(min, max)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(Vec<(u32, u32)>);

impl EdgeSet {
    pub fn new(edges: Vec<(u32, u32)>) -> Self {
        let mut out: Vec<(u32, u32)> = edges
            .into_iter()
            .map(|(u, v)| {
                assert!(u != v, "self-loop ({u},{u}) in edge set");
                (u.min(v), u.max(v))
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        EdgeSet(out)
    }

    pub fn empty() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, u: u32, v: u32) -> bool {
        let e = (u.min(v), u.max(v));
        self.0.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[(u32, u32)] {
        &self.0
    }
}

impl FromIterator<(u32, u32)> for EdgeSet {
    fn from_iter<T: IntoIterator<Item = (u32, u32)>>(iter: T) -> Self {
        EdgeSet::new(iter.into_iter().collect())
    }
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Construction validates simplicity (no self-loops, no parallel edges) and
/// records whether the graph is connected. All operations are pure; the
/// enumerators hold many derived graphs at once, so every transformation
/// returns a fresh graph plus an id mapping instead of mutating.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
    connected: bool,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(u32, u32)>) -> Result<Graph> {
        let mut norm: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == v {
                return Err(Error::GraphFormat(format!("self-loop at vertex {u}")));
            }
            if u as usize >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v as usize >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::GraphFormat("parallel edge".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut g = Graph {
            n,
            edges: norm,
            adj,
            connected: true,
        };
        g.connected = g.compute_connected();
        Ok(g)
    }

    /// Parses the plain text format: line 1 is `n m`, followed by `m` lines
    /// `u v` with `0 <= u,v < n` and `u != v`.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut tokens = text.split_whitespace();
        let mut next_num = |what: &str| -> Result<u64> {
            tokens
                .next()
                .ok_or_else(|| Error::GraphFormat(format!("missing {what}")))?
                .parse::<u64>()
                .map_err(|_| Error::GraphFormat(format!("invalid {what}")))
        };
        let n = next_num("vertex count")? as usize;
        let m = next_num("edge count")? as usize;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let u = next_num("edge endpoint")?;
            let v = next_num("edge endpoint")?;
            edges.push((u as u32, v as u32));
        }
        if tokens.next().is_some() {
            return Err(Error::GraphFormat("trailing input after edge list".into()));
        }
        Graph::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        0..self.n as u32
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_sorted(self.vertices().collect())
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet(self.edges.clone())
    }

    fn compute_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let blocked = vec![false; self.n];
        self.bfs_from(0, &blocked).len() == self.n
    }

    /// Vertices reachable from `start`, never entering a blocked vertex.
    /// Returns them in ascending order. `start` must not be blocked.
    pub(crate) fn bfs_from(&self, start: u32, blocked: &[bool]) -> Vec<u32> {
        debug_assert!(!blocked[start as usize]);
        let mut seen = vec![false; self.n];
        seen[start as usize] = true;
        let mut queue = VecDeque::from([start]);
        let mut out = vec![start];
        while let Some(v) = queue.pop_front() {
            metrics::bump(1);
            for &u in self.neighbors(v) {
                metrics::bump(1);
                if !seen[u as usize] && !blocked[u as usize] {
                    seen[u as usize] = true;
                    out.push(u);
                    queue.push_back(u);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub(crate) fn blocked_mask(&self, removed: &VertexSet) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        for v in removed {
            mask[v as usize] = true;
        }
        mask
    }

    /// Connected components of the graph with `removed` vertices deleted,
    /// ordered by their smallest contained vertex.
    pub fn components_minus_vertices(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let blocked = self.blocked_mask(removed);
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for v in 0..self.n as u32 {
            if blocked[v as usize] || seen[v as usize] {
                continue;
            }
            let comp = self.bfs_from(v, &blocked);
            for &u in &comp {
                seen[u as usize] = true;
            }
            comps.push(VertexSet::from_sorted(comp));
        }
        comps
    }

    /// Connected components of the graph with `removed` edges deleted,
    /// ordered by their smallest contained vertex.
    pub fn components_minus_edges(&self, removed: &EdgeSet) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for v in 0..self.n as u32 {
            if seen[v as usize] {
                continue;
            }
            let mut comp = vec![v];
            seen[v as usize] = true;
            let mut queue = VecDeque::from([v]);
            while let Some(w) = queue.pop_front() {
                metrics::bump(1);
                for &u in self.neighbors(w) {
                    metrics::bump(1);
                    if !seen[u as usize] && !removed.contains(w, u) {
                        seen[u as usize] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(VertexSet::from_sorted(comp));
        }
        comps
    }

    /// The open neighborhood `N(X)`: vertices outside `x` adjacent to some
    /// vertex of `x`.
    pub fn neighbors_of_set(&self, x: &VertexSet) -> VertexSet {
        let mut out = BTreeSet::new();
        for v in x {
            metrics::bump(1);
            for &u in self.neighbors(v) {
                metrics::bump(1);
                if !x.contains(u) {
                    out.insert(u);
                }
            }
        }
        VertexSet::from_sorted(out.into_iter().collect())
    }

    /// Cut vertices of the induced subgraph `G[within]`, which must be
    /// connected.
    pub fn articulation_points(&self, within: &VertexSet) -> Result<VertexSet> {
        let k = within.len();
        if k == 0 {
            return Ok(VertexSet::empty());
        }
        let mut sub_id = vec![usize::MAX; self.n];
        for (i, v) in within.iter().enumerate() {
            if v as usize >= self.n {
                return Err(Error::VertexOutOfRange(v, self.n));
            }
            sub_id[v as usize] = i;
        }
        let adj: Vec<Vec<usize>> = within
            .iter()
            .map(|v| {
                self.neighbors(v)
                    .iter()
                    .filter_map(|&u| {
                        let i = sub_id[u as usize];
                        (i != usize::MAX).then_some(i)
                    })
                    .collect()
            })
            .collect();

        // Iterative lowpoint DFS; the recursion would overflow on long paths.
        let mut disc = vec![0usize; k];
        let mut low = vec![0usize; k];
        let mut is_cut = vec![false; k];
        let mut timer = 1usize;
        disc[0] = timer;
        low[0] = timer;
        let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
        let mut root_children = 0usize;
        let mut visited = 1usize;
        while let Some(frame) = stack.last_mut() {
            let (v, parent, ref mut next) = *frame;
            if let Some(&u) = adj[v].get(*next) {
                frame.2 += 1;
                metrics::bump(1);
                if disc[u] == 0 {
                    timer += 1;
                    disc[u] = timer;
                    low[u] = timer;
                    visited += 1;
                    stack.push((u, v, 0));
                } else if u != parent {
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some(up) = stack.last_mut() {
                    let w = up.0;
                    low[w] = low[w].min(low[v]);
                    if up.1 == usize::MAX {
                        root_children += 1;
                    }
                    if up.1 != usize::MAX && low[v] >= disc[w] {
                        is_cut[w] = true;
                    }
                }
            }
        }
        if visited != k {
            return Err(Error::InducedDisconnected);
        }
        if root_children > 1 {
            is_cut[0] = true;
        }
        Ok(within
            .iter()
            .zip(is_cut)
            .filter_map(|(v, c)| c.then_some(v))
            .collect())
    }

    /// Identifies all of `x` into a single new vertex, dropping self-loops
    /// and parallel edges created by the identification. Vertices outside
    /// `x` keep their relative order starting at 0; the merged vertex gets
    /// the last id. Returns the contracted graph and the total mapping from
    /// old ids to new ids.
    pub fn contract_set(&self, x: &VertexSet) -> (Graph, Vec<u32>) {
        assert!(!x.is_empty(), "contracting the empty set");
        let merged = (self.n - x.len()) as u32;
        let mut map = vec![0u32; self.n];
        let mut next = 0u32;
        for v in 0..self.n as u32 {
            if x.contains(v) {
                map[v as usize] = merged;
            } else {
                map[v as usize] = next;
                next += 1;
            }
        }
        let mut edges = BTreeSet::new();
        for &(u, v) in &self.edges {
            let (a, b) = (map[u as usize], map[v as usize]);
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        let g = Graph::new(merged as usize + 1, edges.into_iter().collect())
            .expect("contraction preserves simplicity");
        (g, map)
    }

    /// The induced subgraph `G[within]` with vertices renumbered to
    /// `0..within.len()` in ascending order of original id. Returns the
    /// subgraph and the new-to-old id table.
    pub fn induced(&self, within: &VertexSet) -> (Graph, Vec<u32>) {
        let mut sub_id = vec![u32::MAX; self.n];
        for (i, v) in within.iter().enumerate() {
            sub_id[v as usize] = i as u32;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            let (a, b) = (sub_id[u as usize], sub_id[v as usize]);
            if a != u32::MAX && b != u32::MAX {
                edges.push((a, b));
            }
        }
        let g = Graph::new(within.len(), edges).expect("induced subgraph is simple");
        (g, within.iter().collect())
    }

    /// Deletes one vertex, shifting ids above it down by one. Returns the
    /// reduced graph and the old-to-new mapping (`None` for the deleted
    /// vertex).
    pub(crate) fn remove_vertex(&self, v: u32) -> (Graph, Vec<Option<u32>>) {
        let map: Vec<Option<u32>> = (0..self.n as u32)
            .map(|u| match u.cmp(&v) {
                std::cmp::Ordering::Less => Some(u),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(u - 1),
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (map[a as usize].unwrap(), map[b as usize].unwrap()))
            .collect();
        let g = Graph::new(self.n - 1, edges).expect("vertex deletion preserves simplicity");
        (g, map)
    }
}

/// The line graph of `g` extended with one terminal vertex per terminal of
/// `pairs`, each adjacent to the edge-vertices of its incident edges. Node
/// multicuts of the expansion correspond bijectively to edge multicuts of
/// the original instance.
#[derive(Clone, Debug)]
pub struct LineGraphExpansion {
    pub graph: Graph,
    pub pairs: PairTerminals,
    /// Edge of `g` represented by each vertex `0..m` of the expansion.
    edge_vertices: Vec<(u32, u32)>,
    /// `(original terminal, expansion vertex)`, ascending in both columns.
    terminal_vertices: Vec<(u32, u32)>,
}

impl LineGraphExpansion {
    pub fn edge_of_vertex(&self, v: u32) -> Option<(u32, u32)> {
        self.edge_vertices.get(v as usize).copied()
    }

    pub fn vertex_of_edge(&self, u: u32, v: u32) -> Option<u32> {
        let e = (u.min(v), u.max(v));
        self.edge_vertices.binary_search(&e).ok().map(|i| i as u32)
    }

    pub fn terminal_vertex(&self, t: u32) -> Option<u32> {
        self.terminal_vertices
            .binary_search_by_key(&t, |&(orig, _)| orig)
            .ok()
            .map(|i| self.terminal_vertices[i].1)
    }

    /// Maps a vertex set of the expansion (which must consist of
    /// edge-vertices only) back to the edge set of the original graph.
    pub fn edges_of_vertex_set(&self, vs: &VertexSet) -> EdgeSet {
        EdgeSet::new(
            vs.iter()
                .map(|v| {
                    self.edge_of_vertex(v)
                        .expect("terminal vertex in an edge cut")
                })
                .collect(),
        )
    }

    /// Maps an edge set of the original graph to the corresponding vertex
    /// set of the expansion.
    pub fn vertex_set_of_edges(&self, es: &EdgeSet) -> VertexSet {
        es.iter()
            .map(|(u, v)| self.vertex_of_edge(u, v).expect("edge not in host graph"))
            .collect()
    }
}

/// Builds the line graph of `g` plus a pendant-style terminal vertex for
/// each terminal of `pairs`, and rewrites the pairs onto the new terminal
/// vertices.
pub fn line_graph_expand(g: &Graph, pairs: &PairTerminals) -> Result<LineGraphExpansion> {
    pairs.validate_for(g)?;
    let m = g.m();
    let terminals = pairs.terminals();
    let n2 = m + terminals.len();

    let mut incident: Vec<Vec<u32>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        incident[u as usize].push(i as u32);
        incident[v as usize].push(i as u32);
    }

    let mut edges2 = Vec::new();
    // Two edge-vertices are adjacent iff the edges share an endpoint; in a
    // simple graph that endpoint is unique, so no duplicates arise.
    for lst in &incident {
        for (a, &e1) in lst.iter().enumerate() {
            for &e2 in &lst[a + 1..] {
                edges2.push((e1, e2));
            }
        }
    }
    let mut terminal_vertices = Vec::with_capacity(terminals.len());
    for (rank, t) in terminals.iter().enumerate() {
        let tv = (m + rank) as u32;
        terminal_vertices.push((t, tv));
        for &e in &incident[t as usize] {
            edges2.push((e, tv));
        }
    }

    let graph = Graph::new(n2, edges2)?;
    let tv_of = |t: u32| -> u32 {
        let i = terminal_vertices
            .binary_search_by_key(&t, |&(orig, _)| orig)
            .expect("terminal present");
        terminal_vertices[i].1
    };
    let new_pairs = PairTerminals::new(
        pairs
            .pairs()
            .iter()
            .map(|&(s, t)| (tv_of(s), tv_of(t)))
            .collect(),
    )?;

    Ok(LineGraphExpansion {
        graph,
        pairs: new_pairs,
        edge_vertices: g.edges().to_vec(),
        terminal_vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rejects_self_loops_and_parallel_edges() {
        assert!(Graph::new(3, vec![(0, 0)]).is_err());
        assert!(Graph::new(3, vec![(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let g = Graph::parse("4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert!(g.is_connected());
        assert!(Graph::parse("2 1\n0 1\n1").is_err());
        assert!(Graph::parse("2 2\n0 1\n").is_err());
    }

    #[test]
    fn connectivity_flag() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert!(fixtures::c6().is_connected());
    }

    #[test]
    fn components_after_vertex_deletions() {
        let p3 = fixtures::p3();
        let comps = p3.components_minus_vertices(&VertexSet::new(vec![1]));
        assert_eq!(
            comps,
            vec![VertexSet::new(vec![0]), VertexSet::new(vec![2])]
        );

        let star = fixtures::star3();
        let comps = star.components_minus_vertices(&VertexSet::empty());
        assert_eq!(comps, vec![VertexSet::new(vec![0, 1, 2, 3])]);

        let c6 = fixtures::c6();
        let comps = c6.components_minus_vertices(&VertexSet::new(vec![1, 3, 5]));
        assert_eq!(
            comps,
            vec![
                VertexSet::new(vec![0]),
                VertexSet::new(vec![2]),
                VertexSet::new(vec![4])
            ]
        );
    }

    #[test]
    fn components_after_edge_deletions() {
        let c4 = fixtures::c4();
        let comps = c4.components_minus_edges(&EdgeSet::new(vec![(0, 1), (2, 3)]));
        assert_eq!(
            comps,
            vec![VertexSet::new(vec![0, 3]), VertexSet::new(vec![1, 2])]
        );

        let star = fixtures::star3();
        let comps = star.components_minus_edges(&EdgeSet::new(vec![(0, 2), (0, 3)]));
        assert_eq!(
            comps,
            vec![
                VertexSet::new(vec![0, 1]),
                VertexSet::new(vec![2]),
                VertexSet::new(vec![3])
            ]
        );

        let p3 = fixtures::p3();
        let comps = p3.components_minus_edges(&EdgeSet::empty());
        assert_eq!(comps, vec![VertexSet::new(vec![0, 1, 2])]);
    }

    #[test]
    fn set_neighborhoods() {
        let star = fixtures::star3();
        assert_eq!(
            star.neighbors_of_set(&VertexSet::new(vec![0])),
            VertexSet::new(vec![1, 2, 3])
        );
        let c4 = fixtures::c4();
        assert_eq!(
            c4.neighbors_of_set(&VertexSet::new(vec![0, 1])),
            VertexSet::new(vec![2, 3])
        );
        let p5 = fixtures::p5();
        assert_eq!(
            p5.neighbors_of_set(&VertexSet::new(vec![2])),
            VertexSet::new(vec![1, 3])
        );
    }

    #[test]
    fn articulation_points_on_fixtures() {
        let p5 = fixtures::p5();
        assert_eq!(
            p5.articulation_points(&VertexSet::new(vec![1, 2, 3]))
                .unwrap(),
            VertexSet::new(vec![2])
        );
        let c4 = fixtures::c4();
        assert_eq!(
            c4.articulation_points(&VertexSet::new(vec![0, 1, 2, 3]))
                .unwrap(),
            VertexSet::empty()
        );
        let star = fixtures::star3();
        assert_eq!(
            star.articulation_points(&VertexSet::new(vec![0, 1, 2]))
                .unwrap(),
            VertexSet::new(vec![0])
        );
    }

    #[test]
    fn articulation_points_rejects_disconnected_subgraph() {
        let p5 = fixtures::p5();
        assert!(matches!(
            p5.articulation_points(&VertexSet::new(vec![0, 4])),
            Err(Error::InducedDisconnected)
        ));
    }

    // Definitional cross-check: v is a cut vertex of G[within] iff deleting
    // it increases the component count of the induced subgraph.
    #[test]
    fn articulation_points_match_component_counting() {
        for seed in 0..40u64 {
            let g = crate::oracle::random_connected_graph(7, 0.35, seed);
            let within = g.vertex_set();
            let aps = g.articulation_points(&within).unwrap();
            let base = g.components_minus_vertices(&VertexSet::empty()).len();
            for v in &within {
                let split = g.components_minus_vertices(&VertexSet::new(vec![v])).len();
                assert_eq!(aps.contains(v), split > base, "seed {seed} vertex {v}");
            }
        }
    }

    #[test]
    fn contraction_examples() {
        let c4 = fixtures::c4();
        let (g, map) = c4.contract_set(&VertexSet::new(vec![1, 3]));
        assert_eq!(g.n(), 3);
        let w = map[1];
        assert_eq!(map[3], w);
        assert_eq!(g.edge_set(), EdgeSet::new(vec![(map[0], w), (map[2], w)]));

        let p3 = fixtures::p3();
        let (g, _) = p3.contract_set(&VertexSet::new(vec![0, 1]));
        assert_eq!((g.n(), g.m()), (2, 1));

        let k4 = fixtures::k4();
        let (g, _) = k4.contract_set(&VertexSet::new(vec![0, 1, 2, 3]));
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn line_graph_expansion_shapes() {
        // Path 0-1-2 with the endpoint pair becomes a 4-vertex path.
        let p3 = fixtures::p3();
        let pairs = PairTerminals::new(vec![(0, 2)]).unwrap();
        let exp = line_graph_expand(&p3, &pairs).unwrap();
        assert_eq!(exp.graph.n(), 4);
        assert_eq!(exp.graph.m(), 3);
        assert_eq!(
            exp.graph
                .vertices()
                .filter(|&v| exp.graph.degree(v) == 1)
                .count(),
            2
        );

        // A single edge with its endpoints paired becomes a 3-vertex path
        // whose middle is the only node multicut.
        let k2 = Graph::new(2, vec![(0, 1)]).unwrap();
        let pairs = PairTerminals::new(vec![(0, 1)]).unwrap();
        let exp = line_graph_expand(&k2, &pairs).unwrap();
        assert_eq!(exp.graph.n(), 3);
        assert_eq!(exp.edge_of_vertex(0), Some((0, 1)));

        // Star edges pairwise share the center: the line graph is a triangle.
        let star = fixtures::star3();
        let pairs = PairTerminals::new(vec![(1, 2)]).unwrap();
        let exp = line_graph_expand(&star, &pairs).unwrap();
        assert_eq!(exp.graph.n(), 5);
        for a in 0..3 {
            for b in a + 1..3 {
                assert!(exp.graph.has_edge(a, b));
            }
        }
        let t1 = exp.terminal_vertex(1).unwrap();
        let t2 = exp.terminal_vertex(2).unwrap();
        assert_eq!(exp.graph.degree(t1), 1);
        assert!(exp.graph.has_edge(t1, exp.vertex_of_edge(0, 1).unwrap()));
        assert!(exp.graph.has_edge(t2, exp.vertex_of_edge(0, 2).unwrap()));
    }
}
