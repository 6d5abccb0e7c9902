//! Randomized stress sweep: checks every enumerator against the
//! brute-force oracle on instances larger than the committed acceptance
//! sizes. Usage: cargo run --release --example stress -- <rounds>
use cutenum::graph::{EdgeSet, VertexSet};
use cutenum::multicut::{enumerate_minimal_edge_multicuts, enumerate_minimal_node_multicuts};
use cutenum::multiway_edge::enumerate_minimal_edge_multiway;
use cutenum::multiway_node::enumerate_minimal_node_multiway;
use cutenum::oracle;
use cutenum::solution::{OrderedTerminals, PairTerminals};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

fn main() {
    let rounds: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(300);
    let mut checked = [0usize; 4];
    for seed in 0..rounds {
        let mut r = ChaCha8Rng::seed_from_u64(seed * 31 + 1);
        let n = r.gen_range(4..=8usize);
        let q = r.gen_range(0.2..0.8f64);
        let g = oracle::random_connected_graph(n, q, seed * 7 + 3);

        // node multicut, up to 4 pairs
        {
            let mut pairs = Vec::new();
            for _ in 0..r.gen_range(1..=4usize) {
                let s = r.gen_range(0..n as u32);
                let t = r.gen_range(0..n as u32);
                if s != t {
                    pairs.push((s, t));
                }
            }
            if !pairs.is_empty() {
                let spec = PairTerminals::new(pairs).unwrap();
                let got: Vec<VertexSet> = enumerate_minimal_node_multicuts(&g, &spec)
                    .unwrap()
                    .collect();
                let want = sorted(oracle::brute_force_minimal_node_multicuts(&g, &spec).unwrap());
                assert_eq!(
                    sorted(got),
                    want,
                    "node multicut seed {seed} {:?} {:?}",
                    g,
                    spec.pairs()
                );
                checked[0] += 1;
            }
        }
        // edge multicut, up to 3 pairs (line graphs grow fast)
        if g.m() <= 12 {
            let mut pairs = Vec::new();
            for _ in 0..r.gen_range(1..=3usize) {
                let s = r.gen_range(0..n as u32);
                let t = r.gen_range(0..n as u32);
                if s != t {
                    pairs.push((s, t));
                }
            }
            if !pairs.is_empty() {
                let spec = PairTerminals::new(pairs).unwrap();
                let got: Vec<EdgeSet> = enumerate_minimal_edge_multicuts(&g, &spec)
                    .unwrap()
                    .collect();
                let want = sorted(oracle::brute_force_minimal_edge_multicuts(&g, &spec).unwrap());
                assert_eq!(
                    sorted(got),
                    want,
                    "edge multicut seed {seed} {:?} {:?}",
                    g,
                    spec.pairs()
                );
                checked[1] += 1;
            }
        }
        // node + edge multiway, k up to 5
        {
            let k = r.gen_range(2..=5usize.min(n));
            let mut ids: Vec<u32> = (0..n as u32).collect();
            ids.shuffle(&mut r);
            ids.truncate(k);
            let spec = OrderedTerminals::new(ids).unwrap();
            let got: Vec<VertexSet> = enumerate_minimal_node_multiway(&g, &spec)
                .unwrap()
                .collect();
            let want = sorted(oracle::brute_force_minimal_node_multiway(&g, &spec).unwrap());
            assert_eq!(
                sorted(got),
                want,
                "node multiway seed {seed} {:?} {:?}",
                g,
                spec.as_slice()
            );
            checked[2] += 1;

            if g.m() <= 18 {
                let got: Vec<EdgeSet> = enumerate_minimal_edge_multiway(&g, &spec)
                    .unwrap()
                    .collect();
                let want = sorted(oracle::brute_force_minimal_edge_multiway(&g, &spec).unwrap());
                assert_eq!(
                    sorted(got),
                    want,
                    "edge multiway seed {seed} {:?} {:?}",
                    g,
                    spec.as_slice()
                );
                checked[3] += 1;
            }
        }
    }
    println!(
        "stress ok: node-mc={} edge-mc={} node-mw={} edge-mw={}",
        checked[0], checked[1], checked[2], checked[3]
    );
}
