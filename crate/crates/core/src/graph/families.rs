//! Small named graph families used by tests, oracles and benchmarks.

use alloc::vec::Vec;

use super::Graph;

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &edges).expect("valid")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("valid")
}

pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    if n >= 3 {
        edges.push((n - 1, 0));
    }
    Graph::from_edges(n, &edges).expect("valid")
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("valid")
}

/// `rows x cols` grid; vertex `(r, c)` is `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::from_edges(rows * cols, &edges).expect("valid")
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("valid")
}

/// Disjoint union of `graphs`, relabelled consecutively.
pub fn disjoint_union(graphs: &[Graph]) -> Graph {
    let n = graphs.iter().map(Graph::n).sum();
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in graphs {
        edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += g.n();
    }
    Graph::from_edges(n, &edges).expect("valid")
}

/// `g` plus extra edges.
pub fn with_edges(g: &Graph, extra: &[(usize, usize)]) -> Graph {
    let mut edges: Vec<_> = g.edges().collect();
    edges.extend_from_slice(extra);
    Graph::from_edges(g.n(), &edges).expect("valid")
}
