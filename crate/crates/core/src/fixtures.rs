//! Named small graphs used by the tests, the docs, and the CLI examples,
//! plus the parameterized families the delay measurements run on.

use crate::graph::Graph;

/// Path on `n` vertices: `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Graph {
    let edges = (1..n as u32).map(|v| (v - 1, v)).collect();
    Graph::new(n, edges).unwrap()
}

/// Cycle on `n` vertices.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
    edges.push((0, n as u32 - 1));
    Graph::new(n, edges).unwrap()
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let edges = (1..=leaves as u32).map(|v| (0, v)).collect();
    Graph::new(leaves + 1, edges).unwrap()
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Two hubs 0 and 1 joined through `j` shared middle vertices (K_{2,j}).
pub fn double_star(j: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..j as u32 {
        edges.push((0, 2 + i));
        edges.push((1, 2 + i));
    }
    Graph::new(j + 2, edges).unwrap()
}

pub fn p3() -> Graph {
    path(3)
}

pub fn p5() -> Graph {
    path(5)
}

pub fn c4() -> Graph {
    cycle(4)
}

pub fn c6() -> Graph {
    cycle(6)
}

pub fn star3() -> Graph {
    star(3)
}

pub fn k4() -> Graph {
    complete(4)
}

pub fn triangle() -> Graph {
    complete(3)
}
