use alloc::vec::Vec;

use crate::graph::Graph;
use crate::hamilton::AugmentedGraph;
use crate::partition::{MarkStrategy, Partition};

/// Per part, the marked vertices in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Marking {
    pub marked: Vec<Vec<usize>>,
}

/// Cap on `|M(i)|` under the bounded strategy.
pub fn mark_cap(delta: usize, exponent: u32) -> usize {
    (delta + 1).saturating_pow(exponent)
}

/// `Full` marks everything. `Bounded` marks, per neighboring part, the part-side
/// endpoints of the `2Δ + 2` lexicographically smallest cross edges, then the two
/// smallest unmarked vertices, truncated to [`mark_cap`] smallest ids.
pub fn mark(gx: &AugmentedGraph, p: &Partition, strategy: MarkStrategy, exponent: u32) -> Marking {
    if strategy == MarkStrategy::Full {
        return Marking { marked: p.parts().to_vec() };
    }
    let g = &gx.base;
    let delta = p.quotient(g).degree();
    let per_pair = 2 * delta + 2;
    let cap = mark_cap(delta, exponent);
    let mut cross: Vec<Vec<Vec<(usize, usize)>>> = alloc::vec![Vec::new(); p.len()];
    let mut slot_of: Vec<alloc::collections::BTreeMap<usize, usize>> = alloc::vec![Default::default(); p.len()];
    for (u, v) in g.edges() {
        let (a, b) = (p.part_of(u), p.part_of(v));
        if a == b {
            continue;
        }
        for (x, y, mine) in [(a, b, u), (b, a, v)] {
            let next = cross[x].len();
            let s = *slot_of[x].entry(y).or_insert(next);
            if s == cross[x].len() {
                cross[x].push(Vec::new());
            }
            cross[x][s].push((u, mine));
        }
    }
    let mut marked = Vec::with_capacity(p.len());
    for (i, part) in p.parts().iter().enumerate() {
        let mut m: Vec<usize> = Vec::new();
        for edges in &cross[i] {
            for &(_, mine) in edges.iter().take(per_pair) {
                m.push(mine);
            }
        }
        m.sort_unstable();
        m.dedup();
        let extras: Vec<usize> = part.iter().copied().filter(|v| m.binary_search(v).is_err()).take(2).collect();
        m.extend(extras);
        m.sort_unstable();
        m.truncate(cap.max(1));
        marked.push(m);
    }
    Marking { marked }
}

/// Vertex of the contracted graph: an original vertex or the contraction of a part's unmarked vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Vertex(usize),
    Contracted(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedCompressed {
    pub h: Graph,
    /// `h` without cross-part edges at contracted vertices.
    pub h_prime: Graph,
    /// `h` with all edges between kept sets of adjacent parts.
    pub h_twin: Graph,
    pub weights: Vec<u64>,
    pub origin: Vec<Origin>,
    /// Per part, its kept H vertices (marked vertices and the contracted vertex).
    pub kept: Vec<Vec<usize>>,
    /// Per part, the contracted H vertex if any vertex is unmarked.
    pub contracted: Vec<Option<usize>>,
    /// Per part, unmarked G vertices in ascending order.
    pub unmarked: Vec<Vec<usize>>,
}

/// H vertices are ordered by representative G id (the smallest unmarked vertex
/// for a contracted vertex), so a full marking yields the identity map.
pub fn build_weighted(gx: &AugmentedGraph, p: &Partition, m: &Marking) -> WeightedCompressed {
    let g = &gx.base;
    let n = g.n();
    let mut is_marked = alloc::vec![false; n];
    for part in &m.marked {
        for &v in part {
            is_marked[v] = true;
        }
    }
    let unmarked: Vec<Vec<usize>> =
        p.parts().iter().map(|part| part.iter().copied().filter(|&v| !is_marked[v]).collect()).collect();
    let mut reps: Vec<(usize, Origin)> = (0..n).filter(|&v| is_marked[v]).map(|v| (v, Origin::Vertex(v))).collect();
    for (i, u) in unmarked.iter().enumerate() {
        if let Some(&first) = u.first() {
            reps.push((first, Origin::Contracted(i)));
        }
    }
    reps.sort_unstable_by_key(|r| r.0);
    let origin: Vec<Origin> = reps.iter().map(|r| r.1).collect();
    let mut h_of = alloc::vec![usize::MAX; n];
    let mut contracted = alloc::vec![None; p.len()];
    let mut weights = Vec::with_capacity(origin.len());
    for (hv, o) in origin.iter().enumerate() {
        match *o {
            Origin::Vertex(v) => {
                h_of[v] = hv;
                weights.push(1);
            }
            Origin::Contracted(i) => {
                for &v in &unmarked[i] {
                    h_of[v] = hv;
                }
                contracted[i] = Some(hv);
                weights.push(unmarked[i].len() as u64);
            }
        }
    }
    let mut kept: Vec<Vec<usize>> = alloc::vec![Vec::new(); p.len()];
    for (hv, o) in origin.iter().enumerate() {
        let part = match *o {
            Origin::Vertex(v) => p.part_of(v),
            Origin::Contracted(i) => i,
        };
        kept[part].push(hv);
    }
    let mut inner = Vec::new();
    for q in &kept {
        for (a, &x) in q.iter().enumerate() {
            for &y in &q[a + 1..] {
                inner.push((x, y));
            }
        }
    }
    let is_contracted = |hv: usize| matches!(origin[hv], Origin::Contracted(_));
    let mut cross = Vec::new();
    let mut part_pairs = Vec::new();
    for (u, v) in g.edges() {
        let (a, b) = (p.part_of(u), p.part_of(v));
        if a != b {
            cross.push((h_of[u], h_of[v]));
            part_pairs.push((a.min(b), a.max(b)));
        }
    }
    let mut h_edges = inner.clone();
    h_edges.extend(cross.iter().copied());
    let h = Graph::from_edges(origin.len(), &h_edges).expect("h indices in range");
    let mut hp_edges = inner.clone();
    hp_edges.extend(cross.iter().copied().filter(|&(x, y)| !is_contracted(x) && !is_contracted(y)));
    let h_prime = Graph::from_edges(origin.len(), &hp_edges).expect("h indices in range");
    part_pairs.sort_unstable();
    part_pairs.dedup();
    let mut tw_edges = inner;
    for (a, b) in part_pairs {
        for &x in &kept[a] {
            for &y in &kept[b] {
                tw_edges.push((x, y));
            }
        }
    }
    let h_twin = Graph::from_edges(origin.len(), &tw_edges).expect("h indices in range");
    WeightedCompressed { h, h_prime, h_twin, weights, origin, kept, contracted, unmarked }
}

impl WeightedCompressed {
    /// G vertices of an H path, contracted vertices expanded in ascending id order.
    pub fn expand(&self, path: &[usize]) -> Vec<usize> {
        let mut out = Vec::new();
        for &hv in path {
            match self.origin[hv] {
                Origin::Vertex(v) => out.push(v),
                Origin::Contracted(i) => out.extend(self.unmarked[i].iter().copied()),
            }
        }
        out
    }
}
