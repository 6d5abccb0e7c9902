//! Brute-force reference enumerators used to certify the real algorithms
//! on small instances, plus a deterministic random-graph generator.
//!
//! The oracles work by exhaustion over the candidate universe (non-terminal
//! vertices for node cuts, edges for edge cuts) and apply the definitional
//! cut predicate directly with plain component computations — deliberately
//! not the characterization-based checks the enumerators rely on. Since
//! every cut predicate here is monotone under supersets, a candidate is
//! inclusion-minimal exactly when no single-element deletion stays a cut.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::solution::{CutSolution, OrderedTerminals, PairTerminals};
use crate::steiner::SteinerSpec;

/// Cut kind enumerated by [`brute_force_enumerate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    NodeMulticut,
    EdgeMulticut,
    NodeMultiway,
    EdgeMultiway,
    SteinerNode,
}

/// Terminal input matching the oracle kind.
#[derive(Clone, Copy, Debug)]
pub enum OracleInput<'a> {
    Pairs(&'a PairTerminals),
    Ordered(&'a OrderedTerminals),
    Steiner(&'a SteinerSpec),
}

/// Largest allowed candidate universe: 2^22 subsets.
pub const UNIVERSE_GUARD_BITS: u32 = 22;

fn guard(universe: usize) -> Result<()> {
    if universe > UNIVERSE_GUARD_BITS as usize {
        return Err(Error::OracleGuard(universe, UNIVERSE_GUARD_BITS));
    }
    Ok(())
}

fn pairs_separated(g: &Graph, removed_vertices: &VertexSet, pairs: &[(u32, u32)]) -> bool {
    let comps = g.components_minus_vertices(removed_vertices);
    let mut idx = vec![usize::MAX; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for v in c {
            idx[v as usize] = i;
        }
    }
    pairs
        .iter()
        .all(|&(s, t)| idx[s as usize] != idx[t as usize])
}

fn pairs_separated_edges(g: &Graph, removed: &EdgeSet, pairs: &[(u32, u32)]) -> bool {
    let comps = g.components_minus_edges(removed);
    let mut idx = vec![usize::MAX; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for v in c {
            idx[v as usize] = i;
        }
    }
    pairs
        .iter()
        .all(|&(s, t)| idx[s as usize] != idx[t as usize])
}

/// Enumerates, in subset-rank order, every inclusion-minimal subset of the
/// universe that satisfies a monotone cut predicate.
fn minimal_subsets<F>(universe_len: usize, mut is_cut: F) -> Result<Vec<Vec<usize>>>
where
    F: FnMut(&[usize]) -> bool,
{
    guard(universe_len)?;
    let mut out = Vec::new();
    for mask in 0u32..1u32 << universe_len {
        let members: Vec<usize> = (0..universe_len).filter(|&b| mask >> b & 1 == 1).collect();
        if !is_cut(&members) {
            continue;
        }
        let minimal = (0..members.len()).all(|drop| {
            let reduced: Vec<usize> = members
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != drop)
                .map(|(_, &x)| x)
                .collect();
            !is_cut(&reduced)
        });
        if minimal {
            out.push(members);
        }
    }
    Ok(out)
}

/// All minimal node multicuts of `(g, pairs)`, by exhaustion.
pub fn brute_force_minimal_node_multicuts(
    g: &Graph,
    pairs: &PairTerminals,
) -> Result<Vec<VertexSet>> {
    pairs.validate_for(g)?;
    let candidates: Vec<u32> = g
        .vertices()
        .filter(|&v| !pairs.terminals().contains(v))
        .collect();
    let sets = minimal_subsets(candidates.len(), |members| {
        let m: VertexSet = members.iter().map(|&i| candidates[i]).collect();
        pairs_separated(g, &m, pairs.pairs())
    })?;
    Ok(sets
        .into_iter()
        .map(|ms| ms.into_iter().map(|i| candidates[i]).collect())
        .collect())
}

/// All minimal edge multicuts of `(g, pairs)`, by exhaustion.
pub fn brute_force_minimal_edge_multicuts(
    g: &Graph,
    pairs: &PairTerminals,
) -> Result<Vec<EdgeSet>> {
    pairs.validate_for(g)?;
    let universe = g.edges().to_vec();
    let sets = minimal_subsets(universe.len(), |members| {
        let f: EdgeSet = members.iter().map(|&i| universe[i]).collect();
        pairs_separated_edges(g, &f, pairs.pairs())
    })?;
    Ok(sets
        .into_iter()
        .map(|ms| ms.into_iter().map(|i| universe[i]).collect())
        .collect())
}

/// All minimal node multiway cuts of `(g, terminals)`, by exhaustion.
pub fn brute_force_minimal_node_multiway(
    g: &Graph,
    terminals: &OrderedTerminals,
) -> Result<Vec<VertexSet>> {
    brute_force_minimal_node_multicuts(g, &terminals.all_pairs())
}

/// All minimal edge multiway cuts of `(g, terminals)`, by exhaustion.
pub fn brute_force_minimal_edge_multiway(
    g: &Graph,
    terminals: &OrderedTerminals,
) -> Result<Vec<EdgeSet>> {
    brute_force_minimal_edge_multicuts(g, &terminals.all_pairs())
}

/// Kind-dispatching front end over the per-kind oracles. The input variant
/// must match the kind.
pub fn brute_force_enumerate(
    g: &Graph,
    input: OracleInput<'_>,
    kind: OracleKind,
) -> Result<Vec<CutSolution>> {
    let wrap_v = |v: Vec<VertexSet>| v.into_iter().map(CutSolution::Vertices).collect();
    let wrap_e = |v: Vec<EdgeSet>| v.into_iter().map(CutSolution::Edges).collect();
    match (kind, input) {
        (OracleKind::NodeMulticut, OracleInput::Pairs(p)) => {
            Ok(wrap_v(brute_force_minimal_node_multicuts(g, p)?))
        }
        (OracleKind::EdgeMulticut, OracleInput::Pairs(p)) => {
            Ok(wrap_e(brute_force_minimal_edge_multicuts(g, p)?))
        }
        (OracleKind::NodeMultiway, OracleInput::Ordered(t)) => {
            Ok(wrap_v(brute_force_minimal_node_multiway(g, t)?))
        }
        (OracleKind::EdgeMultiway, OracleInput::Ordered(t)) => {
            Ok(wrap_e(brute_force_minimal_edge_multiway(g, t)?))
        }
        (OracleKind::SteinerNode, OracleInput::Steiner(s)) => Ok(wrap_v(
            crate::steiner::brute_force_minimal_steiner_multicuts(g, s)?,
        )),
        _ => Err(Error::TerminalSpec(
            "oracle input does not match the requested kind".into(),
        )),
    }
}

/// Deterministic connected Erdos-Renyi-style graph: a random spanning tree
/// first, then each remaining pair with probability `q`.
pub fn random_connected_graph(n: usize, q: f64, seed: u64) -> Graph {
    assert!(
        (2..=10).contains(&n),
        "generator is meant for small oracle instances"
    );
    assert!(q > 0.0 && q <= 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = std::collections::BTreeSet::new();
    for v in 1..n as u32 {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(q) {
                edges.insert((u, v));
            }
        }
    }
    Graph::new(n, edges.into_iter().collect()).unwrap()
}
