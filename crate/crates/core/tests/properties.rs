//! Property suites for the invariants that are not acceptance criteria:
//! the line-graph reduction equivalence, the minimalizer and distance
//! laws behind the solution-graph traversals, and structural graph
//! invariants under random inputs.

mod common;

use common::*;
use cutenum::fixtures;
use cutenum::graph::{line_graph_expand, EdgeSet, Graph, VertexSet};
use cutenum::multicut::enumerate_minimal_node_multicuts;
use cutenum::multiway_node::enumerate_minimal_node_multiway;
use cutenum::oracle;
use cutenum::solution::{
    check_minimal_node_multicut, check_minimal_node_multiway, comp_minimalize_multicut,
    comp_minimalize_multiway, connected_avoiding, dist_multicut, dist_multiway, is_node_multicut,
    terminal_components, OrderedTerminals, PairTerminals,
};
use proptest::prelude::*;

// Edge sets are multicuts exactly when their line-graph image is a node
// multicut of the expanded instance, over every subset of E.
#[test]
fn line_graph_reduction_preserves_multicuts() {
    let mut cases: Vec<(Graph, PairTerminals)> = vec![
        (fixtures::p3(), PairTerminals::new(vec![(0, 2)]).unwrap()),
        (fixtures::c4(), PairTerminals::new(vec![(0, 2)]).unwrap()),
        (fixtures::star3(), PairTerminals::new(vec![(1, 2)]).unwrap()),
        (
            fixtures::triangle(),
            PairTerminals::new(vec![(0, 1)]).unwrap(),
        ),
    ];
    for seed in 0..40u64 {
        let mut r = rng(9000 + seed);
        let g = oracle::random_connected_graph(3 + (seed as usize % 4), 0.4, seed);
        let pairs = random_pairs(&g, 2, &mut r);
        cases.push((g, pairs));
    }
    for (g, pairs) in &cases {
        let expansion = line_graph_expand(g, pairs).unwrap();
        for subset in subsets(g.edges()) {
            let f = EdgeSet::new(subset);
            let image = expansion.vertex_set_of_edges(&f);
            let edge_side = separates_pairs_edges(g, pairs.pairs(), &f);
            let node_side = is_node_multicut(&expansion.graph, &expansion.pairs, &image).unwrap();
            assert_eq!(edge_side, node_side, "{f:?} on {g:?}");
        }
    }
}

// The minimalizer returns a minimal sub-multicut and never increases the
// distance to any minimal target.
#[test]
fn minimalizer_shrinks_and_never_moves_away() {
    for seed in 0..40u64 {
        let mut r = rng(9500 + seed);
        let g = oracle::random_connected_graph(3 + (seed as usize % 4), 0.4, 17 * seed + 3);
        let pairs = random_pairs(&g, 3, &mut r);
        let candidates: Vec<u32> = g
            .vertices()
            .filter(|&v| !pairs.terminals().contains(v))
            .collect();
        let targets = oracle::brute_force_minimal_node_multicuts(&g, &pairs).unwrap();
        for subset in subsets(&candidates) {
            let m = VertexSet::new(subset);
            if !separates_pairs_nodes(&g, pairs.pairs(), &m) {
                continue;
            }
            let reduced = comp_minimalize_multicut(&g, &pairs, &m).unwrap();
            assert!(reduced.is_subset_of(&m));
            assert!(check_minimal_node_multicut(&g, &pairs, &reduced).unwrap());
            for target in &targets {
                let before = dist_multicut(&g, &pairs, &m, target).unwrap();
                let after = dist_multicut(&g, &pairs, &reduced, target).unwrap();
                assert!(
                    after <= before,
                    "seed {seed}: comp moved away from {target:?}"
                );
            }
        }
    }
}

#[test]
fn multicut_distance_separates_solutions() {
    for seed in 0..40u64 {
        let mut r = rng(9600 + seed);
        let g = oracle::random_connected_graph(3 + (seed as usize % 4), 0.45, 13 * seed + 1);
        let pairs = random_pairs(&g, 3, &mut r);
        let sols = oracle::brute_force_minimal_node_multicuts(&g, &pairs).unwrap();
        for a in &sols {
            for b in &sols {
                let d = dist_multicut(&g, &pairs, a, b).unwrap();
                assert_eq!(d == 0, a == b, "seed {seed}: dist({a:?},{b:?}) = {d}");
            }
        }
    }
}

#[test]
fn multiway_distance_separates_solutions() {
    for seed in 0..40u64 {
        let mut r = rng(9700 + seed);
        let g = oracle::random_connected_graph(4 + (seed as usize % 4), 0.45, 29 * seed + 5);
        let spec = random_terminals(&g, 2 + (seed as usize % 2), &mut r);
        let sols = oracle::brute_force_minimal_node_multiway(&g, &spec).unwrap();
        for a in &sols {
            for b in &sols {
                let fa = terminal_components(&g, &spec, a).unwrap();
                let fb = terminal_components(&g, &spec, b).unwrap();
                let d = dist_multiway(&fa, &fb).unwrap();
                assert_eq!(d == 0, a == b, "seed {seed}: dist({a:?},{b:?}) = {d}");
            }
        }
    }
}

// The multiway minimalizer agrees with the quadratic removal scan it
// replaces (same ascending order, recomputing components from scratch).
#[test]
fn linear_multiway_minimalizer_matches_naive_scan() {
    for seed in 0..60u64 {
        let mut r = rng(9800 + seed);
        let g = oracle::random_connected_graph(4 + (seed as usize % 5), 0.4, 41 * seed + 11);
        let spec = random_terminals(&g, 2 + (seed as usize % 3).min(1), &mut r);
        let all_pairs = spec.all_pairs();
        let everything: VertexSet = g.vertices().filter(|&v| !spec.contains(v)).collect();
        if !separates_pairs_nodes(&g, all_pairs.pairs(), &everything) {
            continue;
        }
        let candidates: Vec<u32> = everything.iter().collect();
        for subset in subsets(&candidates) {
            let m = VertexSet::new(subset);
            if !separates_pairs_nodes(&g, all_pairs.pairs(), &m) {
                continue;
            }
            let fast = comp_minimalize_multiway(&g, &spec, &m).unwrap();
            let mut naive = m.clone();
            for v in &m {
                let candidate = naive.without(v);
                if separates_pairs_nodes(&g, all_pairs.pairs(), &candidate) {
                    naive = candidate;
                }
            }
            assert_eq!(fast, naive, "seed {seed} on {m:?}");
            assert!(check_minimal_node_multiway(&g, &spec, &fast).unwrap());
        }
    }
}

// Edge multicuts (through the line-graph reduction) agree with the
// brute-force oracle on random instances.
#[test]
fn edge_multicuts_match_oracle() {
    use cutenum::multicut::enumerate_minimal_edge_multicuts;
    for seed in 0..30u64 {
        let mut r = rng(9900 + seed);
        let g = oracle::random_connected_graph(3 + (seed as usize % 4), 0.4, 47 * seed + 2);
        let pairs = random_pairs(&g, 3, &mut r);
        let emitted: Vec<EdgeSet> = enumerate_minimal_edge_multicuts(&g, &pairs)
            .unwrap()
            .collect();
        let expected = sorted(oracle::brute_force_minimal_edge_multicuts(&g, &pairs).unwrap());
        assert_eq!(
            sorted(emitted),
            expected,
            "seed {seed} on {g:?} {:?}",
            pairs.pairs()
        );
    }
}

// Early termination is cheap: taking one solution from a large instance
// costs far less than enumerating it.
#[test]
fn first_multicut_is_lazy() {
    let n = 41;
    let g = fixtures::path(n);
    let pairs = PairTerminals::new(vec![(0, n as u32 - 1)]).unwrap();
    let before = cutenum::metrics::primitive_ops();
    let mut stream = enumerate_minimal_node_multicuts(&g, &pairs).unwrap();
    assert!(stream.next().is_some());
    let spent = cutenum::metrics::primitive_ops() - before;
    assert!(
        spent <= 4 * (n * n * n) as u64,
        "first output cost {spent} ops"
    );
}

// The streams can be handed to another task and drained there.
#[test]
fn streams_are_send() {
    fn assert_send<T: Send>() {}
    assert_send::<cutenum::multicut::NodeMulticutStream>();
    assert_send::<cutenum::multicut::EdgeMulticutStream>();
    assert_send::<cutenum::multiway_node::NodeMultiwayStream>();
    assert_send::<cutenum::multiway_edge::EdgeMultiwayStream>();
    assert_send::<cutenum::separator::SeparatorStream>();
    assert_send::<cutenum::Graph>();
}

// Multiway node enumeration is order-independent as a set.
#[test]
fn multiway_node_order_invariance() {
    let g = fixtures::c6();
    let orders = [[0u32, 2, 4], [4, 0, 2], [2, 4, 0]];
    let mut reference: Option<Vec<VertexSet>> = None;
    for order in orders {
        let spec = OrderedTerminals::new(order.to_vec()).unwrap();
        let sols = sorted(
            enumerate_minimal_node_multiway(&g, &spec)
                .unwrap()
                .collect(),
        );
        match &reference {
            None => reference = Some(sols),
            Some(r) => assert_eq!(&sols, r),
        }
    }
}

proptest! {
    // Components of G - removed partition the surviving vertices, and any
    // two vertices sharing a component are connected by a path avoiding
    // the removals.
    #[test]
    fn components_partition_and_connect(
        n in 2usize..=9,
        q in 0.15f64..=0.9,
        seed in 0u64..5000,
        removal_bits in 0u16..512,
    ) {
        let g = oracle::random_connected_graph(n, q, seed);
        let removed: VertexSet =
            (0..n as u32).filter(|&v| removal_bits >> v & 1 == 1).collect();
        let comps = g.components_minus_vertices(&removed);

        let mut seen = vec![false; n];
        for c in &comps {
            for v in c {
                prop_assert!(!removed.contains(v));
                prop_assert!(!seen[v as usize], "vertex in two components");
                seen[v as usize] = true;
            }
        }
        for v in 0..n as u32 {
            prop_assert_eq!(seen[v as usize], !removed.contains(v));
        }
        for c in &comps {
            let members: Vec<u32> = c.iter().collect();
            for &u in &members {
                for &w in &members {
                    prop_assert!(connected_avoiding(&g, u, w, &removed));
                }
            }
        }
        // Deterministic ordering by smallest contained vertex.
        let mins: Vec<u32> = comps.iter().map(|c| c.min_vertex().unwrap()).collect();
        prop_assert!(mins.windows(2).all(|w| w[0] < w[1]));
    }

    // N(X) is exactly the set of outside vertices adjacent to X.
    #[test]
    fn set_neighborhood_definition(
        n in 2usize..=9,
        q in 0.15f64..=0.9,
        seed in 0u64..5000,
        bits in 0u16..512,
    ) {
        let g = oracle::random_connected_graph(n, q, seed);
        let x: VertexSet = (0..n as u32).filter(|&v| bits >> v & 1 == 1).collect();
        let nx = g.neighbors_of_set(&x);
        for v in 0..n as u32 {
            let expected = !x.contains(v)
                && g.neighbors(v).iter().any(|&u| x.contains(u));
            prop_assert_eq!(nx.contains(v), expected);
        }
    }
}
