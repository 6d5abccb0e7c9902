//! Steiner node multicuts and their correspondence with hypergraph
//! transversals on split graphs.
//!
//! A Steiner node multicut must split at least one pair inside each
//! terminal group. Building a clique on the hypergraph universe and hanging
//! one pendant per (hyperedge, member) pair turns minimal transversals into
//! exactly the minimal Steiner node multicuts of the resulting split graph;
//! both sides are enumerated here by exhaustion and cross-checked.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A hypergraph over universe `0..universe`. Hyperedges are normalized and
/// deduplicated at construction; empty and singleton hyperedges are
/// rejected (a singleton would yield a terminal group with no separable
/// pair).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    universe: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(universe: usize, edges: Vec<Vec<u32>>) -> Result<Self> {
        let mut norm: Vec<VertexSet> = Vec::with_capacity(edges.len());
        for e in edges {
            let e = VertexSet::new(e);
            if e.len() < 2 {
                return Err(Error::Hypergraph(format!(
                    "hyperedge of size {} (need at least 2 members)",
                    e.len()
                )));
            }
            if let Some(v) = e.iter().find(|&v| v as usize >= universe) {
                return Err(Error::Hypergraph(format!("member {v} outside universe")));
            }
            norm.push(e);
        }
        norm.sort();
        norm.dedup();
        Ok(Hypergraph {
            universe,
            edges: norm,
        })
    }

    /// Parses the text format: line 1 is `|U| |E|`, then one line per
    /// hyperedge listing its members.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Hypergraph("empty input".into()))?;
        let mut it = header.split_whitespace();
        let parse_num = |tok: Option<&str>| -> Result<usize> {
            tok.ok_or_else(|| Error::Hypergraph("missing header field".into()))?
                .parse()
                .map_err(|_| Error::Hypergraph("invalid header field".into()))
        };
        let universe = parse_num(it.next())?;
        let m = parse_num(it.next())?;
        if it.next().is_some() {
            return Err(Error::Hypergraph("trailing header input".into()));
        }
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::Hypergraph("missing hyperedge".into()))?;
            let members = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Hypergraph("invalid member".into()))
                })
                .collect::<Result<Vec<u32>>>()?;
            edges.push(members);
        }
        if lines.next().is_some() {
            return Err(Error::Hypergraph("trailing input after hyperedges".into()));
        }
        Hypergraph::new(universe, edges)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }
}

/// Terminal groups `T_1, ..., T_k`; a Steiner node multicut must separate
/// some pair inside every group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerSpec {
    groups: Vec<VertexSet>,
}

impl SteinerSpec {
    pub fn new(groups: Vec<VertexSet>) -> Result<Self> {
        if let Some(g) = groups.iter().find(|g| g.len() < 2) {
            return Err(Error::TerminalSpec(format!(
                "terminal group of size {} has no separable pair",
                g.len()
            )));
        }
        Ok(SteinerSpec { groups })
    }

    pub fn groups(&self) -> &[VertexSet] {
        &self.groups
    }

    /// Union of all groups.
    pub fn all_terminals(&self) -> VertexSet {
        self.groups
            .iter()
            .fold(VertexSet::empty(), |acc, g| acc.union(g))
    }
}

/// The split-graph instance produced from a hypergraph: a clique on the
/// universe plus one pendant per (hyperedge, member) incidence.
#[derive(Clone, Debug)]
pub struct SplitGraphReduction {
    pub graph: Graph,
    pub spec: SteinerSpec,
    universe: usize,
    /// `(hyperedge index, universe vertex)` represented by each pendant, in
    /// pendant-id order starting at `universe`.
    pendants: Vec<(usize, u32)>,
}

impl SplitGraphReduction {
    /// Graph vertices `0..universe()` are the universe vertices, under the
    /// identity mapping.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn pendant_info(&self, v: u32) -> Option<(usize, u32)> {
        (v as usize)
            .checked_sub(self.universe)
            .and_then(|i| self.pendants.get(i))
            .copied()
    }
}

/// Builds the split graph: clique on `U`, pendant vertex `v_{e,v}` adjacent
/// to `v` for each hyperedge `e` and member `v`, and one terminal group per
/// hyperedge collecting its pendants. A vertex appearing in several
/// hyperedges gets several distinct pendants.
pub fn hypergraph_to_split_graph(h: &Hypergraph) -> SplitGraphReduction {
    let u = h.universe();
    let mut edges = Vec::new();
    for a in 0..u as u32 {
        for b in a + 1..u as u32 {
            edges.push((a, b));
        }
    }
    let mut pendants = Vec::new();
    let mut groups = Vec::new();
    let mut next = u as u32;
    for (ei, e) in h.edges().iter().enumerate() {
        let mut group = Vec::new();
        for v in e {
            edges.push((v, next));
            pendants.push((ei, v));
            group.push(next);
            next += 1;
        }
        groups.push(VertexSet::new(group));
    }
    let graph = Graph::new(next as usize, edges).expect("split graph is simple");
    let spec = SteinerSpec::new(groups).expect("hyperedges have at least two members");
    SplitGraphReduction {
        graph,
        spec,
        universe: u,
        pendants,
    }
}

/// All inclusion-minimal Steiner node multicuts of `(g, spec)`, by
/// exhaustion over subsets of the non-terminal vertices.
pub fn brute_force_minimal_steiner_multicuts(
    g: &Graph,
    spec: &SteinerSpec,
) -> Result<Vec<VertexSet>> {
    let terminals = spec.all_terminals();
    for t in &terminals {
        if t as usize >= g.n() {
            return Err(Error::VertexOutOfRange(t, g.n()));
        }
    }
    let candidates: Vec<u32> = g.vertices().filter(|&v| !terminals.contains(v)).collect();
    if candidates.len() > crate::oracle::UNIVERSE_GUARD_BITS as usize {
        return Err(Error::OracleGuard(
            candidates.len(),
            crate::oracle::UNIVERSE_GUARD_BITS,
        ));
    }

    let splits_every_group = |s: &VertexSet| -> bool {
        let comps = g.components_minus_vertices(s);
        let mut idx = vec![usize::MAX; g.n()];
        for (i, c) in comps.iter().enumerate() {
            for v in c {
                idx[v as usize] = i;
            }
        }
        spec.groups().iter().all(|group| {
            let first = group.min_vertex().unwrap();
            group.iter().any(|t| idx[t as usize] != idx[first as usize])
        })
    };

    let mut out = Vec::new();
    for mask in 0u32..1u32 << candidates.len() {
        let s: VertexSet = (0..candidates.len())
            .filter(|&b| mask >> b & 1 == 1)
            .map(|b| candidates[b])
            .collect();
        if !splits_every_group(&s) {
            continue;
        }
        let minimal = s.iter().all(|v| !splits_every_group(&s.without(v)));
        if minimal {
            out.push(s);
        }
    }
    Ok(out)
}

/// All inclusion-minimal transversals of `h`, by exhaustion.
pub fn minimal_transversals_brute(h: &Hypergraph) -> Result<Vec<VertexSet>> {
    let u = h.universe();
    if u > crate::oracle::UNIVERSE_GUARD_BITS as usize {
        return Err(Error::OracleGuard(u, crate::oracle::UNIVERSE_GUARD_BITS));
    }
    let hits_all = |s: &VertexSet| h.edges().iter().all(|e| !e.is_disjoint_from(s));
    let mut out = Vec::new();
    for mask in 0u32..1u32 << u {
        let s: VertexSet = (0..u as u32).filter(|&b| mask >> b & 1 == 1).collect();
        if !hits_all(&s) {
            continue;
        }
        if s.iter().all(|v| !hits_all(&s.without(v))) {
            out.push(s);
        }
    }
    Ok(out)
}

/// Cross-checks the transversal/Steiner-multicut duality: the minimal
/// transversals of `h` must coincide, as subsets of the universe, with the
/// minimal Steiner node multicuts of the constructed split graph.
pub fn cross_check_transversal_duality(h: &Hypergraph) -> Result<bool> {
    let mut transversals = minimal_transversals_brute(h)?;
    let reduction = hypergraph_to_split_graph(h);
    let mut cuts = brute_force_minimal_steiner_multicuts(&reduction.graph, &reduction.spec)?;
    transversals.sort();
    cuts.sort();
    Ok(transversals == cuts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[u32]) -> VertexSet {
        VertexSet::new(v.to_vec())
    }

    #[test]
    fn split_graph_construction() {
        // Universe {a,b} with one hyperedge {a,b}: edge a-b plus a pendant
        // on each endpoint, forming a single 2-pendant group.
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let red = hypergraph_to_split_graph(&h);
        assert_eq!(red.graph.n(), 4);
        assert_eq!(red.graph.m(), 3);
        assert_eq!(red.spec.groups(), &[vs(&[2, 3])]);
        assert_eq!(red.pendant_info(2), Some((0, 0)));

        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let red = hypergraph_to_split_graph(&h);
        assert_eq!(red.graph.n(), 7);
        assert_eq!(red.spec.groups().len(), 2);
        // Clique side stays a clique, pendant side stays independent.
        for a in 0..3 {
            for b in a + 1..3 {
                assert!(red.graph.has_edge(a, b));
            }
        }
        for p in 3..7 {
            assert_eq!(red.graph.degree(p), 1);
        }
    }

    #[test]
    fn singleton_hyperedges_rejected() {
        assert!(matches!(
            Hypergraph::new(1, vec![vec![0]]),
            Err(Error::Hypergraph(_))
        ));
        assert!(Hypergraph::new(2, vec![]).is_ok());
    }

    #[test]
    fn transversal_exhaustion() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(
            minimal_transversals_brute(&h).unwrap(),
            vec![vs(&[0]), vs(&[1])]
        );

        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let mut got = minimal_transversals_brute(&h).unwrap();
        got.sort();
        assert_eq!(got, vec![vs(&[0, 2]), vs(&[1])]);

        let h = Hypergraph::new(3, vec![]).unwrap();
        assert_eq!(
            minimal_transversals_brute(&h).unwrap(),
            vec![VertexSet::empty()]
        );
    }

    #[test]
    fn steiner_multicuts_on_split_graphs() {
        // One group over a path is the ordinary multicut case.
        let p3 = crate::fixtures::p3();
        let spec = SteinerSpec::new(vec![vs(&[0, 2])]).unwrap();
        assert_eq!(
            brute_force_minimal_steiner_multicuts(&p3, &spec).unwrap(),
            vec![vs(&[1])]
        );

        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let red = hypergraph_to_split_graph(&h);
        let mut cuts = brute_force_minimal_steiner_multicuts(&red.graph, &red.spec).unwrap();
        cuts.sort();
        assert_eq!(cuts, vec![vs(&[0, 2]), vs(&[1])]);
    }

    #[test]
    fn duality_on_named_examples() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        assert!(cross_check_transversal_duality(&h).unwrap());
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        assert!(cross_check_transversal_duality(&h).unwrap());
    }

    #[test]
    fn parse_hypergraph_format() {
        let h = Hypergraph::parse("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(h.universe(), 3);
        assert_eq!(h.edges().len(), 2);
        assert!(Hypergraph::parse("3 2\n0 1\n").is_err());
        assert!(Hypergraph::parse("3 1\n0 5\n").is_err());
    }
}
