//! Incremental-polynomial enumeration of minimal node multicuts, and of
//! minimal edge multicuts through the line-graph reduction.
//!
//! The enumerator traverses a strongly connected solution graph breadth
//! first, emitting each minimal multicut the first time it is seen. The
//! neighborhood of a solution M is generated per component C of `C_M` and
//! per cut vertex v adjacent to C: v is released toward C and the
//! neighborhood of `T_v ∪ {v}` outside C is added back. When the subgraph
//! around v and C contains a terminal pair, that single candidate is
//! replaced by one candidate per minimal v-v_t separator of a reduced
//! instance, computed lazily so the traversal stays incremental.
//!
//! Instances are first simplified to a reduced form in which no two
//! terminals are adjacent and no vertex has a full terminal pair in its
//! neighborhood; vertices forced into every solution are collected and
//! re-added to each output.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{line_graph_expand, EdgeSet, Graph, LineGraphExpansion, VertexSet};
use crate::separator::{SeparatorInstance, SeparatorStream};
use crate::solution::{
    comp_minimalize_multicut, component_family, is_node_multicut, vertex_set_key, ComponentFamily,
    PairTerminals,
};

/// A multicut instance after preprocessing. Enumeration runs on the
/// reduced graph; solutions are mapped back through `reduced_to_original`
/// with the forced vertices re-added.
#[derive(Clone, Debug)]
pub struct MulticutInstance {
    graph: Graph,
    pairs: PairTerminals,
    /// Original-id vertices that belong to every minimal multicut.
    forced: VertexSet,
    /// Original vertices represented by each reduced vertex. Non-terminal
    /// classes are singletons; merged terminals carry their whole class.
    reduced_to_original: Vec<Vec<u32>>,
}

impl MulticutInstance {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn pairs(&self) -> &PairTerminals {
        &self.pairs
    }

    pub fn forced(&self) -> &VertexSet {
        &self.forced
    }

    pub fn reduced_to_original(&self) -> &[Vec<u32>] {
        &self.reduced_to_original
    }

    /// Maps a reduced-instance solution to original vertex ids, forced
    /// vertices included.
    pub fn map_to_original(&self, m: &VertexSet) -> VertexSet {
        let mut out: Vec<u32> = self.forced.iter().collect();
        for v in m {
            out.extend_from_slice(&self.reduced_to_original[v as usize]);
        }
        VertexSet::new(out)
    }
}

/// Outcome of preprocessing; infeasibility is an answer, not a failure.
#[derive(Clone, Debug)]
pub enum Preprocessed {
    Feasible(MulticutInstance),
    Infeasible,
}

/// Applies the two reductions to a fixpoint: contract any edge joining two
/// terminals that are not demanded as a pair, and force-delete any vertex
/// whose neighborhood contains a full pair. Reports `Infeasible` exactly
/// when some demanded pair becomes adjacent.
pub fn preprocess(g: &Graph, pairs: &PairTerminals) -> Result<Preprocessed> {
    pairs.validate_for(g)?;
    let mut graph = g.clone();
    let mut cur: Vec<(u32, u32)> = pairs.pairs().to_vec();
    let mut classes: Vec<Vec<u32>> = (0..g.n() as u32).map(|v| vec![v]).collect();
    let mut forced: Vec<u32> = Vec::new();

    'outer: loop {
        if cur.iter().any(|&(s, t)| graph.has_edge(s, t)) {
            return Ok(Preprocessed::Infeasible);
        }
        let tset: VertexSet = cur.iter().flat_map(|&(s, t)| [s, t]).collect();

        // Any remaining terminal-terminal edge is non-demanded: contract it.
        if let Some(&(u, v)) = graph
            .edges()
            .iter()
            .find(|&&(u, v)| tset.contains(u) && tset.contains(v))
        {
            let (g2, map) = graph.contract_set(&VertexSet::new(vec![u, v]));
            let mut new_classes: Vec<Vec<u32>> = vec![Vec::new(); g2.n()];
            for (old, class) in classes.iter().enumerate() {
                new_classes[map[old] as usize].extend_from_slice(class);
            }
            for class in &mut new_classes {
                class.sort_unstable();
            }
            classes = new_classes;
            let mut next: Vec<(u32, u32)> = cur
                .iter()
                .map(|&(s, t)| {
                    let (a, b) = (map[s as usize], map[t as usize]);
                    (a.min(b), a.max(b))
                })
                .collect();
            next.sort_unstable();
            next.dedup();
            cur = next;
            graph = g2;
            continue 'outer;
        }

        // A vertex seeing both endpoints of a pair is in every multicut.
        for v in graph.vertices() {
            let nv = graph.neighbors(v);
            let sees_pair = cur
                .iter()
                .any(|&(s, t)| nv.binary_search(&s).is_ok() && nv.binary_search(&t).is_ok());
            if sees_pair {
                debug_assert!(!tset.contains(v));
                debug_assert_eq!(classes[v as usize].len(), 1);
                forced.push(classes[v as usize][0]);
                let (g2, map) = graph.remove_vertex(v);
                let mut new_classes: Vec<Vec<u32>> = vec![Vec::new(); g2.n()];
                for (old, class) in classes.iter().enumerate() {
                    if let Some(new) = map[old] {
                        new_classes[new as usize] = class.clone();
                    }
                }
                classes = new_classes;
                cur = cur
                    .iter()
                    .map(|&(s, t)| (map[s as usize].unwrap(), map[t as usize].unwrap()))
                    .collect();
                graph = g2;
                continue 'outer;
            }
        }
        break;
    }

    Ok(Preprocessed::Feasible(MulticutInstance {
        graph,
        pairs: PairTerminals::new(cur)?,
        forced: VertexSet::new(forced),
        reduced_to_original: classes,
    }))
}

/// The separator sub-instance for one (component, cut vertex) choice: the
/// subgraph on `C ∪ {v}` with the C-side endpoints of all pairs crossing v
/// identified into a single sink.
#[derive(Clone, Debug)]
pub struct SeparatorReduction {
    pub instance: SeparatorInstance,
    /// Sub-instance vertex id to host-graph vertex id; the identified sink
    /// has no single host vertex.
    to_host: Vec<Option<u32>>,
}

impl SeparatorReduction {
    pub fn host_vertex(&self, v: u32) -> Option<u32> {
        self.to_host[v as usize]
    }

    /// Maps a separator of the sub-instance back to host vertex ids.
    pub fn map_separator(&self, s: &VertexSet) -> VertexSet {
        s.iter()
            .map(|v| self.to_host[v as usize].expect("separator avoids the sink"))
            .collect()
    }
}

/// Builds the sub-instance for `(c, v)`: induce `G[c ∪ {v}]`, collect the
/// C-side endpoints of pairs whose other endpoint lies in `N(v)`, and
/// identify them into the sink. Fails when the subgraph around `v` and `c`
/// contains no terminal pair (the caller should use the direct branch).
pub fn build_absep_subinstance(
    g: &Graph,
    pairs: &PairTerminals,
    m: &VertexSet,
    c: &VertexSet,
    v: u32,
) -> Result<SeparatorReduction> {
    debug_assert!(m.contains(v));
    debug_assert!(g.neighbors_of_set(c).contains(v));

    let mut inside = g.blocked_mask(c);
    inside[v as usize] = true;
    for &u in g.neighbors(v) {
        inside[u as usize] = true;
    }
    if !pairs
        .pairs()
        .iter()
        .any(|&(s, t)| inside[s as usize] && inside[t as usize])
    {
        return Err(Error::NoPairInSubgraph);
    }

    let tv: VertexSet = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&u| pairs.terminals().contains(u))
        .collect();
    let mut endpoints = Vec::new();
    for &(s, t) in pairs.pairs() {
        if tv.contains(s) && c.contains(t) {
            endpoints.push(t);
        }
        if tv.contains(t) && c.contains(s) {
            endpoints.push(s);
        }
    }
    let endpoints = VertexSet::new(endpoints);
    if endpoints.is_empty() {
        // Only reachable when the reductions were not exhausted.
        return Err(Error::NoPairInSubgraph);
    }

    let hull = c.with(v);
    let (h, new_to_old) = g.induced(&hull);
    let sub_id = |orig: u32| hull.as_slice().binary_search(&orig).unwrap() as u32;
    let endpoints_h: VertexSet = endpoints.iter().map(sub_id).collect();
    let (h2, cmap) = h.contract_set(&endpoints_h);
    let source = cmap[sub_id(v) as usize];
    let sink = cmap[endpoints_h.min_vertex().unwrap() as usize];

    let mut to_host = vec![None; h2.n()];
    for (h_id, &orig) in new_to_old.iter().enumerate() {
        let h2_id = cmap[h_id];
        if h2_id != sink {
            to_host[h2_id as usize] = Some(orig);
        }
    }
    let instance = SeparatorInstance::new(h2, source, sink)?;
    Ok(SeparatorReduction { instance, to_host })
}

/// Validates and minimalizes one raw neighborhood candidate. Candidates
/// that touch a terminal or fail the multicut test are discarded; both can
/// only arise from separator outputs that picked up a foreign terminal.
fn finalize_candidate(g: &Graph, pairs: &PairTerminals, cand: &VertexSet) -> Option<VertexSet> {
    if !cand.is_disjoint_from(pairs.terminals()) {
        return None;
    }
    match is_node_multicut(g, pairs, cand) {
        Ok(true) => comp_minimalize_multicut(g, pairs, cand).ok(),
        _ => None,
    }
}

struct SubStream {
    reduction: SeparatorReduction,
    stream: SeparatorStream,
    base: VertexSet,
}

/// Resumable generator for the neighborhood of one solution. Holds no
/// references; the traversal passes the instance back in on every step so
/// a partially consumed expansion can be parked between outputs.
pub(crate) struct NeighborhoodState {
    /// (family component index, cut vertex adjacent to it), in component
    /// order then ascending vertex order.
    items: Vec<(usize, u32)>,
    pos: usize,
    sub: Option<SubStream>,
}

impl NeighborhoodState {
    pub(crate) fn new(g: &Graph, m: &VertexSet, family: &ComponentFamily) -> Self {
        let mut items = Vec::new();
        for (ci, (comp, _)) in family.entries().iter().enumerate() {
            let border = g.neighbors_of_set(comp).intersection(m);
            for v in &border {
                items.push((ci, v));
            }
        }
        NeighborhoodState {
            items,
            pos: 0,
            sub: None,
        }
    }

    pub(crate) fn next(
        &mut self,
        g: &Graph,
        pairs: &PairTerminals,
        m: &VertexSet,
        family: &ComponentFamily,
    ) -> Option<VertexSet> {
        loop {
            if let Some(sub) = &mut self.sub {
                match sub.stream.next() {
                    Some(sep) => {
                        let cand = sub.base.union(&sub.reduction.map_separator(&sep));
                        if let Some(out) = finalize_candidate(g, pairs, &cand) {
                            return Some(out);
                        }
                        continue;
                    }
                    None => {
                        self.sub = None;
                        self.pos += 1;
                        continue;
                    }
                }
            }

            let &(ci, v) = self.items.get(self.pos)?;
            let comp = family.component(ci);
            let tv: VertexSet = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| pairs.terminals().contains(u))
                .collect();
            let moved = tv.with(v);
            let base = m
                .without(v)
                .union(&g.neighbors_of_set(&moved).difference(comp));

            match build_absep_subinstance(g, pairs, m, comp, v) {
                Ok(reduction) => match reduction.instance.enumerate() {
                    Ok(stream) => {
                        self.sub = Some(SubStream {
                            reduction,
                            stream,
                            base,
                        });
                    }
                    Err(_) => {
                        // Source adjacent to the sink; cannot happen on a
                        // reduced instance.
                        debug_assert!(false, "separator sub-instance with adjacent endpoints");
                        self.pos += 1;
                    }
                },
                Err(Error::NoPairInSubgraph) => {
                    self.pos += 1;
                    if let Some(out) = finalize_candidate(g, pairs, &base) {
                        return Some(out);
                    }
                }
                Err(_) => {
                    self.pos += 1;
                }
            }
        }
    }
}

/// The neighborhood of a minimal multicut `m` in the solution graph, as a
/// lazy stream of minimal multicuts (possibly with repeats; the traversal
/// deduplicates). `m` must be a minimal multicut of the reduced instance.
pub fn neighborhood_multicut<'a>(
    inst: &'a MulticutInstance,
    m: &'a VertexSet,
) -> Result<impl Iterator<Item = VertexSet> + 'a> {
    let family = component_family(&inst.graph, &inst.pairs, m)?;
    let mut state = NeighborhoodState::new(&inst.graph, m, &family);
    Ok(std::iter::from_fn(move || {
        state.next(&inst.graph, &inst.pairs, m, &family)
    }))
}

struct ActiveExpansion {
    m: VertexSet,
    family: ComponentFamily,
    state: NeighborhoodState,
}

/// Streaming breadth-first traversal of the multicut solution graph.
/// Solutions are emitted in original vertex ids, each exactly once, at the
/// moment they are first generated; the work between two consecutive
/// outputs is polynomial in the input plus the number of solutions already
/// found.
pub struct NodeMulticutStream {
    instance: Option<MulticutInstance>,
    queue: VecDeque<VertexSet>,
    visited: HashSet<Vec<u8>>,
    active: Option<ActiveExpansion>,
    started: bool,
}

impl NodeMulticutStream {
    pub fn new(g: &Graph, pairs: &PairTerminals) -> Result<Self> {
        let instance = match preprocess(g, pairs)? {
            Preprocessed::Feasible(inst) => Some(inst),
            Preprocessed::Infeasible => None,
        };
        Ok(NodeMulticutStream {
            instance,
            queue: VecDeque::new(),
            visited: HashSet::new(),
            active: None,
            started: false,
        })
    }

    /// True when preprocessing proved the instance has no multicut at all.
    pub fn is_infeasible(&self) -> bool {
        self.instance.is_none()
    }

    pub fn instance(&self) -> Option<&MulticutInstance> {
        self.instance.as_ref()
    }

    /// Retained-state estimate in bytes, for the instrumentation output.
    pub fn retained_bytes_estimate(&self) -> usize {
        let keys: usize = self.visited.iter().map(|k| k.len()).sum();
        let queued: usize = self.queue.iter().map(|s| 4 * s.len()).sum();
        keys + queued
    }
}

impl Iterator for NodeMulticutStream {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let Self {
            instance,
            queue,
            visited,
            active,
            started,
        } = self;
        let inst = instance.as_ref()?;

        if !*started {
            *started = true;
            let all: VertexSet = inst
                .graph
                .vertices()
                .filter(|&v| !inst.pairs.terminals().contains(v))
                .collect();
            debug_assert_eq!(
                is_node_multicut(&inst.graph, &inst.pairs, &all).ok(),
                Some(true)
            );
            let s0 = comp_minimalize_multicut(&inst.graph, &inst.pairs, &all)
                .expect("reduced instance admits the all-non-terminals cut");
            let orig = inst.map_to_original(&s0);
            visited.insert(vertex_set_key(&orig));
            queue.push_back(s0);
            return Some(orig);
        }

        loop {
            if active.is_none() {
                let m = queue.pop_front()?;
                let family = component_family(&inst.graph, &inst.pairs, &m)
                    .expect("queued solutions are multicuts");
                let state = NeighborhoodState::new(&inst.graph, &m, &family);
                *active = Some(ActiveExpansion { m, family, state });
            }
            let exp = active.as_mut().unwrap();
            match exp
                .state
                .next(&inst.graph, &inst.pairs, &exp.m, &exp.family)
            {
                Some(candidate) => {
                    let orig = inst.map_to_original(&candidate);
                    if visited.insert(vertex_set_key(&orig)) {
                        queue.push_back(candidate);
                        return Some(orig);
                    }
                }
                None => *active = None,
            }
        }
    }
}

/// Starts the minimal node multicut enumeration for `(g, pairs)`.
pub fn enumerate_minimal_node_multicuts(
    g: &Graph,
    pairs: &PairTerminals,
) -> Result<NodeMulticutStream> {
    NodeMulticutStream::new(g, pairs)
}

/// Minimal edge multicuts, enumerated as node multicuts of the line-graph
/// expansion and mapped back to edges.
pub struct EdgeMulticutStream {
    expansion: LineGraphExpansion,
    inner: NodeMulticutStream,
}

impl EdgeMulticutStream {
    /// Edge instances always admit a cut; kept for interface symmetry.
    pub fn is_infeasible(&self) -> bool {
        self.inner.is_infeasible()
    }

    pub fn retained_bytes_estimate(&self) -> usize {
        self.inner.retained_bytes_estimate()
    }
}

impl Iterator for EdgeMulticutStream {
    type Item = EdgeSet;

    fn next(&mut self) -> Option<EdgeSet> {
        self.inner
            .next()
            .map(|vs| self.expansion.edges_of_vertex_set(&vs))
    }
}

/// Starts the minimal edge multicut enumeration for `(g, pairs)`.
pub fn enumerate_minimal_edge_multicuts(
    g: &Graph,
    pairs: &PairTerminals,
) -> Result<EdgeMulticutStream> {
    let expansion = line_graph_expand(g, pairs)?;
    let inner = NodeMulticutStream::new(&expansion.graph, &expansion.pairs)?;
    Ok(EdgeMulticutStream { expansion, inner })
}
