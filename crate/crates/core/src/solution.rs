//! Solution representations and the characterization machinery shared by
//! all enumerators: terminal specifications, component families, the
//! minimality checks, the deterministic `comp()` minimalizers, the two
//! distance measures that certify solution-graph connectivity, and the
//! canonical byte keys used for duplicate detection.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::metrics;

/// A set of unordered terminal pairs `B`. Pairs are normalized to
/// `(min, max)` and kept sorted; `terminals()` is `T(B)`, the union of all
/// pair endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTerminals {
    pairs: Vec<(u32, u32)>,
    terminals: VertexSet,
}

impl PairTerminals {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        let mut norm = Vec::with_capacity(pairs.len());
        for (s, t) in pairs {
            if s == t {
                return Err(Error::TerminalSpec(format!(
                    "pair ({s},{t}) has equal endpoints"
                )));
            }
            norm.push((s.min(t), s.max(t)));
        }
        norm.sort_unstable();
        norm.dedup();
        let terminals = norm.iter().flat_map(|&(s, t)| [s, t]).collect();
        Ok(PairTerminals {
            pairs: norm,
            terminals,
        })
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn terminals(&self) -> &VertexSet {
        &self.terminals
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        for t in &self.terminals {
            if t as usize >= g.n() {
                return Err(Error::VertexOutOfRange(t, g.n()));
            }
        }
        Ok(())
    }
}

/// An ordered terminal list `(t_1, ..., t_k)`. The order is fixed for a
/// whole run; the reverse-search root depends on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedTerminals {
    order: Vec<u32>,
    set: VertexSet,
}

impl OrderedTerminals {
    pub fn new(order: Vec<u32>) -> Result<Self> {
        let set = VertexSet::new(order.clone());
        if set.len() != order.len() {
            return Err(Error::TerminalSpec("duplicate terminal".into()));
        }
        Ok(OrderedTerminals { order, set })
    }

    pub fn k(&self) -> usize {
        self.order.len()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.order[i]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.order
    }

    pub fn set(&self) -> &VertexSet {
        &self.set
    }

    pub fn contains(&self, v: u32) -> bool {
        self.set.contains(v)
    }

    /// Index of `v` in the terminal order, if it is a terminal.
    pub fn index_of(&self, v: u32) -> Option<usize> {
        self.order.iter().position(|&t| t == v)
    }

    /// All unordered pairs over the terminal set, as a pair spec.
    pub fn all_pairs(&self) -> PairTerminals {
        let mut pairs = Vec::new();
        for i in 0..self.order.len() {
            for j in i + 1..self.order.len() {
                pairs.push((self.order[i], self.order[j]));
            }
        }
        PairTerminals::new(pairs).expect("terminals are distinct")
    }

    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        for &t in &self.order {
            if t as usize >= g.n() {
                return Err(Error::VertexOutOfRange(t, g.n()));
            }
        }
        Ok(())
    }
}

/// Either form of terminal input, for callers that dispatch on mode.
#[derive(Clone, Debug)]
pub enum TerminalSpec {
    Pairs(PairTerminals),
    Ordered(OrderedTerminals),
}

/// One minimal cut, as a canonical vertex set or edge set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CutSolution {
    Vertices(VertexSet),
    Edges(EdgeSet),
}

impl CutSolution {
    pub fn canonical_key(&self) -> Vec<u8> {
        match self {
            CutSolution::Vertices(vs) => vertex_set_key(vs),
            CutSolution::Edges(es) => edge_set_key(es),
        }
    }
}

/// Injective, deterministic encoding of a vertex set: 4-byte big-endian
/// element count, then each element as a 4-byte big-endian integer.
pub fn vertex_set_key(vs: &VertexSet) -> Vec<u8> {
    let mut out = Vec::with_capacity(4 + 4 * vs.len());
    out.extend_from_slice(&(vs.len() as u32).to_be_bytes());
    for v in vs {
        out.extend_from_slice(&v.to_be_bytes());
    }
    out
}

/// Same encoding for edge sets; each edge contributes two integers, the
/// smaller endpoint first.
pub fn edge_set_key(es: &EdgeSet) -> Vec<u8> {
    let mut out = Vec::with_capacity(4 + 8 * es.len());
    out.extend_from_slice(&(es.len() as u32).to_be_bytes());
    for (u, v) in es.iter() {
        out.extend_from_slice(&u.to_be_bytes());
        out.extend_from_slice(&v.to_be_bytes());
    }
    out
}

/// The family `C_M` of a node multicut: the components of `G - M` that
/// contain at least one terminal (terminal-free components are excluded),
/// each with the terminals it contains. No listed component holds a full
/// terminal pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentFamily {
    entries: Vec<(VertexSet, VertexSet)>,
}

impl ComponentFamily {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(VertexSet, VertexSet)] {
        &self.entries
    }

    pub fn component(&self, i: usize) -> &VertexSet {
        &self.entries[i].0
    }

    pub fn terminals_inside(&self, i: usize) -> &VertexSet {
        &self.entries[i].1
    }
}

/// The `k` terminal components of a node multiway cut, indexed by the
/// terminal order: entry `i` is the component of `t_i` in `G - M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminalComponents {
    blocks: Vec<VertexSet>,
}

impl TerminalComponents {
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &VertexSet {
        &self.blocks[i]
    }
}

/// An ordered partition of all of `V` into `k` connected blocks, the i-th
/// containing `t_i`. This is the bijective representation of a minimal
/// edge multiway cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    blocks: Vec<VertexSet>,
    position: Vec<u32>,
}

impl OrderedPartition {
    /// Builds a partition from blocks, validating that they are disjoint
    /// and cover `0..n`.
    pub fn new(blocks: Vec<VertexSet>, n: usize) -> Result<Self> {
        let mut position = vec![u32::MAX; n];
        let mut covered = 0usize;
        for (i, b) in blocks.iter().enumerate() {
            for v in b {
                if v as usize >= n {
                    return Err(Error::VertexOutOfRange(v, n));
                }
                if position[v as usize] != u32::MAX {
                    return Err(Error::TerminalSpec(format!("vertex {v} in two blocks")));
                }
                position[v as usize] = i as u32;
                covered += 1;
            }
        }
        if covered != n {
            return Err(Error::TerminalSpec(
                "blocks do not cover the vertex set".into(),
            ));
        }
        Ok(OrderedPartition { blocks, position })
    }

    pub(crate) fn from_parts(blocks: Vec<VertexSet>, position: Vec<u32>) -> Self {
        OrderedPartition { blocks, position }
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &VertexSet {
        &self.blocks[i]
    }

    /// Block index of `v` (0-based).
    pub fn position(&self, v: u32) -> usize {
        self.position[v as usize] as usize
    }

    pub fn positions(&self) -> &[u32] {
        &self.position
    }

    /// The edges of `g` joining two different blocks: the edge multiway cut
    /// this partition represents.
    pub fn cut_edges(&self, g: &Graph) -> EdgeSet {
        EdgeSet::new(
            g.edges()
                .iter()
                .copied()
                .filter(|&(u, v)| self.position[u as usize] != self.position[v as usize])
                .collect(),
        )
    }
}

fn component_index(g: &Graph, m: &VertexSet) -> (Vec<VertexSet>, Vec<usize>) {
    let comps = g.components_minus_vertices(m);
    let mut idx = vec![usize::MAX; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for v in c {
            idx[v as usize] = i;
        }
    }
    (comps, idx)
}

/// True iff every pair of `spec` lies in distinct components of `G - m`.
/// `m` must not contain a terminal.
pub fn is_node_multicut(g: &Graph, spec: &PairTerminals, m: &VertexSet) -> Result<bool> {
    if let Some(t) = m.iter().find(|&v| spec.terminals().contains(v)) {
        return Err(Error::TerminalInCut(t));
    }
    let (_, idx) = component_index(g, m);
    Ok(spec
        .pairs()
        .iter()
        .all(|&(s, t)| idx[s as usize] != idx[t as usize]))
}

/// The family `C_M` of terminal-bearing components of `G - m`. Fails if
/// some component holds a full terminal pair (i.e. `m` is not a multicut).
pub fn component_family(g: &Graph, spec: &PairTerminals, m: &VertexSet) -> Result<ComponentFamily> {
    if let Some(t) = m.iter().find(|&v| spec.terminals().contains(v)) {
        return Err(Error::TerminalInCut(t));
    }
    let (comps, idx) = component_index(g, m);
    if spec
        .pairs()
        .iter()
        .any(|&(s, t)| idx[s as usize] == idx[t as usize])
    {
        return Err(Error::NotAMulticut);
    }
    let entries = comps
        .into_iter()
        .filter_map(|c| {
            let inside = c.intersection(spec.terminals());
            (!inside.is_empty()).then_some((c, inside))
        })
        .collect();
    Ok(ComponentFamily { entries })
}

/// Minimality of a node multicut: every cut vertex must touch both sides
/// of some pair. `m` must already be a node multicut.
pub fn check_minimal_node_multicut(g: &Graph, spec: &PairTerminals, m: &VertexSet) -> Result<bool> {
    if let Some(t) = m.iter().find(|&v| spec.terminals().contains(v)) {
        return Err(Error::TerminalInCut(t));
    }
    let (_, idx) = component_index(g, m);
    if spec
        .pairs()
        .iter()
        .any(|&(s, t)| idx[s as usize] == idx[t as usize])
    {
        return Err(Error::NotAMulticut);
    }
    for v in m {
        let mut touched: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter_map(|&u| (idx[u as usize] != usize::MAX).then_some(idx[u as usize]))
            .collect();
        touched.sort_unstable();
        touched.dedup();
        let witnessed = spec.pairs().iter().any(|&(s, t)| {
            touched.binary_search(&idx[s as usize]).is_ok()
                && touched.binary_search(&idx[t as usize]).is_ok()
        });
        if !witnessed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Deterministic minimalizer `comp()`: scans removal candidates in
/// ascending vertex order, dropping `v` whenever `m \ {v}` is still a
/// multicut. The input must be a multicut.
pub fn comp_minimalize_multicut(
    g: &Graph,
    spec: &PairTerminals,
    m: &VertexSet,
) -> Result<VertexSet> {
    if !is_node_multicut(g, spec, m)? {
        return Err(Error::NotAMulticut);
    }
    let mut current = m.clone();
    for v in m {
        let candidate = current.without(v);
        if is_node_multicut(g, spec, &candidate)? {
            current = candidate;
        }
    }
    Ok(current)
}

/// `mcc(C', M)`: the component of `G - m` minimizing `|C' \ C|`, ties
/// broken in favor of the component with the smallest contained vertex.
/// Returns `None` when `G - m` has no components at all.
fn mcc<'a>(comps: &'a [VertexSet], c_prime: &VertexSet) -> Option<&'a VertexSet> {
    // Components arrive ordered by smallest contained vertex, so the first
    // minimizer in list order realizes the prescribed tie-break.
    let mut best: Option<(&VertexSet, usize)> = None;
    for c in comps {
        let loss = c_prime.difference(c).len();
        match best {
            Some((_, b)) if b <= loss => {}
            _ => best = Some((c, loss)),
        }
    }
    best.map(|(c, _)| c)
}

/// The multicut progress measure: the total number of vertices each
/// component of `C_{M'}` loses against its best-matching component of
/// `G - m`. Both inputs must be node multicuts.
pub fn dist_multicut(
    g: &Graph,
    spec: &PairTerminals,
    m: &VertexSet,
    m_target: &VertexSet,
) -> Result<usize> {
    if !is_node_multicut(g, spec, m)? {
        return Err(Error::NotAMulticut);
    }
    let target_family = component_family(g, spec, m_target)?;
    let comps = g.components_minus_vertices(m);
    let mut total = 0usize;
    for (c_prime, _) in target_family.entries() {
        match mcc(&comps, c_prime) {
            Some(c) => total += c_prime.difference(c).len(),
            None => total += c_prime.len(),
        }
    }
    Ok(total)
}

fn terminal_component_index(
    g: &Graph,
    spec: &OrderedTerminals,
    m: &VertexSet,
) -> Result<(Vec<VertexSet>, Vec<usize>, Vec<usize>)> {
    if let Some(t) = m.iter().find(|&v| spec.contains(v)) {
        return Err(Error::TerminalInCut(t));
    }
    let (comps, idx) = component_index(g, m);
    let mut comp_of_terminal = Vec::with_capacity(spec.k());
    let mut seen = vec![false; comps.len()];
    for &t in spec.as_slice() {
        let c = idx[t as usize];
        if seen[c] {
            return Err(Error::NotAMultiwayCut);
        }
        seen[c] = true;
        comp_of_terminal.push(c);
    }
    Ok((comps, idx, comp_of_terminal))
}

/// The `k` terminal components of `G - m`, indexed by terminal order.
/// Fails if two terminals share a component or `m` touches a terminal.
pub fn terminal_components(
    g: &Graph,
    spec: &OrderedTerminals,
    m: &VertexSet,
) -> Result<TerminalComponents> {
    let (comps, _, comp_of_terminal) = terminal_component_index(g, spec, m)?;
    Ok(TerminalComponents {
        blocks: comp_of_terminal
            .into_iter()
            .map(|c| comps[c].clone())
            .collect(),
    })
}

/// Minimality of a node multiway cut: every cut vertex must have neighbors
/// in at least two of the terminal components `C_1..C_k`.
pub fn check_minimal_node_multiway(
    g: &Graph,
    spec: &OrderedTerminals,
    m: &VertexSet,
) -> Result<bool> {
    let (_, idx, comp_of_terminal) = terminal_component_index(g, spec, m)?;
    let mut is_terminal_comp = vec![false; g.n() + 1];
    for &c in &comp_of_terminal {
        is_terminal_comp[c] = true;
    }
    for v in m {
        let mut touched: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter_map(|&u| {
                let c = idx[u as usize];
                (c != usize::MAX && is_terminal_comp[c]).then_some(c)
            })
            .collect();
        touched.sort_unstable();
        touched.dedup();
        if touched.len() < 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Linear-time `comp()` for multiway cuts: one ascending pass over `m`
/// with an incrementally merged component structure. A vertex is dropped
/// exactly when its removal would reconnect at most one terminal
/// component.
pub fn comp_minimalize_multiway(
    g: &Graph,
    spec: &OrderedTerminals,
    m: &VertexSet,
) -> Result<VertexSet> {
    // Union-find over the active (non-cut) vertices; each root remembers
    // which terminal its component contains, if any.
    struct Dsu {
        parent: Vec<u32>,
        size: Vec<u32>,
        terminal: Vec<Option<u32>>,
    }
    impl Dsu {
        fn find(&mut self, mut v: u32) -> u32 {
            while self.parent[v as usize] != v {
                self.parent[v as usize] = self.parent[self.parent[v as usize] as usize];
                v = self.parent[v as usize];
            }
            v
        }
        fn union(&mut self, a: u32, b: u32) {
            let (mut ra, mut rb) = (self.find(a), self.find(b));
            if ra == rb {
                return;
            }
            if self.size[ra as usize] < self.size[rb as usize] {
                std::mem::swap(&mut ra, &mut rb);
            }
            self.parent[rb as usize] = ra;
            self.size[ra as usize] += self.size[rb as usize];
            debug_assert!(
                self.terminal[ra as usize].is_none() || self.terminal[rb as usize].is_none()
            );
            if self.terminal[ra as usize].is_none() {
                self.terminal[ra as usize] = self.terminal[rb as usize];
            }
        }
    }

    if let Some(t) = m.iter().find(|&v| spec.contains(v)) {
        return Err(Error::TerminalInCut(t));
    }
    let n = g.n();
    let mut active = vec![true; n];
    for v in m {
        active[v as usize] = false;
    }
    let mut dsu = Dsu {
        parent: (0..n as u32).collect(),
        size: vec![1; n],
        terminal: vec![None; n],
    };
    for (i, &t) in spec.as_slice().iter().enumerate() {
        dsu.terminal[t as usize] = Some(i as u32);
    }
    for &(u, v) in g.edges() {
        metrics::bump(1);
        if active[u as usize] && active[v as usize] {
            let (ru, rv) = (dsu.find(u), dsu.find(v));
            if ru != rv
                && dsu.terminal[ru as usize].is_some()
                && dsu.terminal[rv as usize].is_some()
            {
                return Err(Error::NotAMultiwayCut);
            }
            dsu.union(u, v);
        }
    }

    let mut kept = Vec::new();
    for v in m {
        metrics::bump(1);
        let mut tags: Vec<u32> = Vec::new();
        for &u in g.neighbors(v) {
            metrics::bump(1);
            if active[u as usize] {
                let r = dsu.find(u);
                if let Some(tag) = dsu.terminal[r as usize] {
                    if !tags.contains(&tag) {
                        tags.push(tag);
                    }
                }
            }
        }
        if tags.len() >= 2 {
            kept.push(v);
        } else {
            active[v as usize] = true;
            for &u in g.neighbors(v) {
                if active[u as usize] {
                    dsu.union(v, u);
                }
            }
        }
    }
    Ok(VertexSet::from_sorted(kept))
}

/// The multiway progress measure: componentwise loss between two indexed
/// families over the same terminal order.
pub fn dist_multiway(a: &TerminalComponents, b: &TerminalComponents) -> Result<usize> {
    if a.k() != b.k() {
        return Err(Error::FamilySizeMismatch(a.k(), b.k()));
    }
    Ok(a.blocks
        .iter()
        .zip(&b.blocks)
        .map(|(c, c_prime)| c_prime.difference(c).len())
        .sum())
}

/// True iff removing `f` leaves exactly `k` components, the i-th
/// containing `t_i`, with every removed edge crossing two of them. That is
/// precisely minimality for edge multiway cuts: minimal cuts are the
/// crossing-edge sets of partitions into k connected terminal blocks, and
/// a cut holding an edge internal to one block could shed it. Non-cuts
/// simply return false.
pub fn check_minimal_edge_multiway(g: &Graph, spec: &OrderedTerminals, f: &EdgeSet) -> bool {
    debug_assert!(f.iter().all(|(u, v)| g.has_edge(u, v)));
    let comps = g.components_minus_edges(f);
    if comps.len() != spec.k() {
        return false;
    }
    let mut used = vec![false; comps.len()];
    for &t in spec.as_slice() {
        match comps.iter().position(|c| c.contains(t)) {
            Some(i) if !used[i] => used[i] = true,
            _ => return false,
        }
    }
    let mut idx = vec![usize::MAX; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for v in c {
            idx[v as usize] = i;
        }
    }
    f.iter().all(|(u, v)| idx[u as usize] != idx[v as usize])
}

/// BFS check that `u` and `w` are connected in `G - removed`; used by the
/// oracle-style assertions in tests.
pub fn connected_avoiding(g: &Graph, u: u32, w: u32, removed: &VertexSet) -> bool {
    if removed.contains(u) || removed.contains(w) {
        return false;
    }
    if u == w {
        return true;
    }
    let blocked = g.blocked_mask(removed);
    let mut seen = vec![false; g.n()];
    seen[u as usize] = true;
    let mut queue = VecDeque::from([u]);
    while let Some(v) = queue.pop_front() {
        metrics::bump(1);
        for &x in g.neighbors(v) {
            metrics::bump(1);
            if x == w {
                return true;
            }
            if !seen[x as usize] && !blocked[x as usize] {
                seen[x as usize] = true;
                queue.push_back(x);
            }
        }
    }
    false
}
