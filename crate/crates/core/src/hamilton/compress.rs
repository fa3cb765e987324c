use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::partition::{BlueStrategy, Partition};

/// `G` plus the red edges that turn every part into a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedGraph {
    pub base: Graph,
    /// Sorted, `u < v`.
    pub red_edges: Vec<(usize, usize)>,
    /// `base` with the red edges added.
    pub closure: Graph,
}

impl AugmentedGraph {
    pub fn is_red(&self, u: usize, v: usize) -> bool {
        self.red_edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }
}

pub fn red_closure(g: &Graph, p: &Partition) -> AugmentedGraph {
    let mut red = Vec::new();
    for part in p.parts() {
        for (i, &u) in part.iter().enumerate() {
            for &v in &part[i + 1..] {
                if !g.has_edge(u, v) {
                    red.push((u, v));
                }
            }
        }
    }
    red.sort_unstable();
    let closure = crate::graph::families::with_edges(g, &red);
    AugmentedGraph { base: g.clone(), red_edges: red, closure }
}

/// Per quotient edge `(i, j)` with `i < j`, the kept cross edges as `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BlueSelection {
    pub sets: BTreeMap<(usize, usize), Vec<(usize, usize)>>,
}

impl BlueSelection {
    pub fn edge_count(&self) -> usize {
        self.sets.values().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.sets.values().flatten().copied()
    }
}

/// Cap on `|E_ij|` under [`BlueStrategy::Bounded`] for quotient degree `delta`.
pub fn blue_cap(delta: usize) -> usize {
    let t = (2 * delta).saturating_sub(1);
    4 * t * t
}

/// Selects the cross edges a witness may use. `Bounded` scans each pair's cross
/// edges lexicographically, keeps an edge while both endpoints have fewer than
/// `2Δ` kept edges, and stops at [`blue_cap`].
pub fn select_blue_edges(gx: &AugmentedGraph, p: &Partition, strategy: BlueStrategy) -> BlueSelection {
    let g = &gx.base;
    let mut sets: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for (u, v) in g.edges() {
        let (a, b) = (p.part_of(u), p.part_of(v));
        if a != b {
            sets.entry((a.min(b), a.max(b))).or_default().push((u, v));
        }
    }
    if strategy == BlueStrategy::Bounded {
        let delta = p.quotient(g).degree();
        let cap = blue_cap(delta);
        let per_end = 2 * delta;
        for edges in sets.values_mut() {
            let mut load: BTreeMap<usize, usize> = BTreeMap::new();
            let mut kept = Vec::new();
            for &(u, v) in edges.iter() {
                if kept.len() >= cap {
                    break;
                }
                let (lu, lv) = (load.get(&u).copied().unwrap_or(0), load.get(&v).copied().unwrap_or(0));
                if lu < per_end && lv < per_end {
                    *load.entry(u).or_default() += 1;
                    *load.entry(v).or_default() += 1;
                    kept.push((u, v));
                }
            }
            *edges = kept;
        }
    }
    BlueSelection { sets }
}

/// Graph on the kept vertices: every kept part is a clique, cross edges are blue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressedGraph {
    pub h: Graph,
    /// H vertex to G vertex, strictly increasing.
    pub origin: Vec<usize>,
    /// Per part, kept G vertices in ascending order.
    pub kept: Vec<Vec<usize>>,
    /// Per part, the kept vertex without blue edges.
    pub special: Vec<Option<usize>>,
}

impl CompressedGraph {
    pub fn h_vertex(&self, v: usize) -> Option<usize> {
        self.origin.binary_search(&v).ok()
    }
}

pub fn compress(gx: &AugmentedGraph, p: &Partition, blue: &BlueSelection) -> CompressedGraph {
    let n = gx.base.n();
    let mut incident = alloc::vec![false; n];
    for (u, v) in blue.edges() {
        incident[u] = true;
        incident[v] = true;
    }
    let mut keep = incident.clone();
    let mut special = Vec::with_capacity(p.len());
    for part in p.parts() {
        let s = part.iter().copied().find(|&v| !incident[v]);
        if let Some(s) = s {
            keep[s] = true;
        }
        special.push(s);
    }
    let origin: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
    let index = |v: usize| origin.binary_search(&v).expect("kept vertex");
    let kept: Vec<Vec<usize>> = p.parts().iter().map(|part| part.iter().copied().filter(|&v| keep[v]).collect()).collect();
    let mut edges = Vec::new();
    for part in &kept {
        for (i, &u) in part.iter().enumerate() {
            for &v in &part[i + 1..] {
                edges.push((index(u), index(v)));
            }
        }
    }
    edges.extend(blue.edges().map(|(u, v)| (index(u), index(v))));
    let h = Graph::from_edges(origin.len(), &edges).expect("kept indices in range");
    CompressedGraph { h, origin, kept, special }
}
