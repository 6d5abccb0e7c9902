//! Shared helpers for the integration suites: deterministic random
//! instances and definitional (characterization-free) cut predicates.

#![allow(dead_code)]

use cutenum::graph::{EdgeSet, Graph, VertexSet};
use cutenum::solution::{OrderedTerminals, PairTerminals};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Up to `max_pairs` random distinct terminal pairs over distinct vertices.
pub fn random_pairs(g: &Graph, max_pairs: usize, rng: &mut ChaCha8Rng) -> PairTerminals {
    let n = g.n() as u32;
    let want = rng.gen_range(1..=max_pairs);
    let mut pairs = Vec::new();
    for _ in 0..want * 3 {
        if pairs.len() >= want {
            break;
        }
        let s = rng.gen_range(0..n);
        let t = rng.gen_range(0..n);
        if s != t {
            pairs.push((s.min(t), s.max(t)));
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    PairTerminals::new(pairs).unwrap()
}

/// `k` random distinct terminals in random order.
pub fn random_terminals(g: &Graph, k: usize, rng: &mut ChaCha8Rng) -> OrderedTerminals {
    let mut ids: Vec<u32> = g.vertices().collect();
    ids.shuffle(rng);
    ids.truncate(k);
    OrderedTerminals::new(ids).unwrap()
}

fn component_index(comps: &[VertexSet], n: usize) -> Vec<usize> {
    let mut idx = vec![usize::MAX; n];
    for (i, c) in comps.iter().enumerate() {
        for v in c {
            idx[v as usize] = i;
        }
    }
    idx
}

/// Definitional node-cut test: every pair separated in `G - m`.
pub fn separates_pairs_nodes(g: &Graph, pairs: &[(u32, u32)], m: &VertexSet) -> bool {
    let idx = component_index(&g.components_minus_vertices(m), g.n());
    pairs
        .iter()
        .all(|&(s, t)| idx[s as usize] != idx[t as usize])
}

/// Definitional edge-cut test: every pair separated in `G - f`.
pub fn separates_pairs_edges(g: &Graph, pairs: &[(u32, u32)], f: &EdgeSet) -> bool {
    let idx = component_index(&g.components_minus_edges(f), g.n());
    pairs
        .iter()
        .all(|&(s, t)| idx[s as usize] != idx[t as usize])
}

/// All subsets of `universe`, in subset-rank order.
pub fn subsets<T: Copy>(universe: &[T]) -> impl Iterator<Item = Vec<T>> + '_ {
    assert!(universe.len() <= 22);
    (0u32..1 << universe.len()).map(move |mask| {
        (0..universe.len())
            .filter(|&b| mask >> b & 1 == 1)
            .map(|b| universe[b])
            .collect()
    })
}

/// Inclusion-minimality for a monotone cut predicate: no single-element
/// deletion stays a cut.
pub fn minimal_under<T: Copy + PartialEq, F: Fn(&[T]) -> bool>(members: &[T], is_cut: F) -> bool {
    if !is_cut(members) {
        return false;
    }
    (0..members.len()).all(|drop| {
        let reduced: Vec<T> = members
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != drop)
            .map(|(_, &x)| x)
            .collect();
        !is_cut(&reduced)
    })
}

pub fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

/// Rebuilds the ordered partition of a minimal edge multiway cut: the k
/// components of `G - f`, indexed by the terminal they contain.
pub fn partition_of_cut(
    g: &Graph,
    spec: &OrderedTerminals,
    f: &EdgeSet,
) -> cutenum::solution::OrderedPartition {
    let comps = g.components_minus_edges(f);
    assert_eq!(comps.len(), spec.k(), "not a minimal edge multiway cut");
    let blocks: Vec<VertexSet> = spec
        .as_slice()
        .iter()
        .map(|&t| {
            comps
                .iter()
                .find(|c| c.contains(t))
                .expect("terminal in a component")
                .clone()
        })
        .collect();
    cutenum::solution::OrderedPartition::new(blocks, g.n()).unwrap()
}
