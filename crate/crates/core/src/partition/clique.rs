use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest set accepted by [`clique_partition_exact`].
pub const CLIQUE_PARTITION_GUARD: usize = 24;

/// Partition of `x` into at most `kappa` cliques of `g`, if one exists.
/// Cliques are listed by smallest member; members ascend.
pub fn clique_partition_exact(g: &Graph, x: &VertexSet, kappa: usize) -> Result<Option<Vec<Vec<usize>>>> {
    let verts = x.to_vec();
    if verts.len() > CLIQUE_PARTITION_GUARD {
        return Err(Error::guard("clique partition set size", CLIQUE_PARTITION_GUARD, verts.len()));
    }
    if verts.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let (sub, _) = g.induced(&verts);
    let n = verts.len();
    let adj: Vec<u32> =
        (0..n).map(|v| sub.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u))).collect();
    let mut search = Search { adj: &adj, n, kappa, cliques: Vec::new() };
    if !search.run(0) {
        return Ok(None);
    }
    let mut out: Vec<Vec<usize>> = search
        .cliques
        .iter()
        .map(|&mask| (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| verts[i]).collect())
        .collect();
    out.sort();
    Ok(Some(out))
}

struct Search<'a> {
    adj: &'a [u32],
    n: usize,
    kappa: usize,
    cliques: Vec<u32>,
}

impl Search<'_> {
    fn run(&mut self, v: usize) -> bool {
        if v == self.n {
            return true;
        }
        // greedy independent set among the unassigned vertices bounds the remaining new cliques
        if self.independent_lower_bound(v) > self.kappa {
            return false;
        }
        for c in 0..self.cliques.len() {
            if self.cliques[c] & !self.adj[v] == 0 {
                self.cliques[c] |= 1 << v;
                if self.run(v + 1) {
                    return true;
                }
                self.cliques[c] &= !(1 << v);
            }
        }
        if self.cliques.len() < self.kappa {
            self.cliques.push(1 << v);
            if self.run(v + 1) {
                return true;
            }
            self.cliques.pop();
        }
        false
    }

    /// Lower bound on the total clique count: vertices `>= v` that are pairwise
    /// nonadjacent and fit into no open clique each need a clique of their own.
    fn independent_lower_bound(&self, v: usize) -> usize {
        let mut chosen = 0u32;
        let mut count = self.cliques.len();
        for u in v..self.n {
            let fits = self.cliques.iter().any(|&c| c & !self.adj[u] == 0);
            if !fits && chosen & self.adj[u] == 0 {
                chosen |= 1 << u;
                count += 1;
            }
        }
        count
    }
}

/// First-fit clique cover in ascending id order. Not minimum.
pub fn clique_partition_greedy(g: &Graph, x: &VertexSet) -> Vec<Vec<usize>> {
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for v in x.iter() {
        match cliques.iter_mut().find(|c| c.iter().all(|&u| g.has_edge(u, v))) {
            Some(c) => c.push(v),
            None => cliques.push(alloc::vec![v]),
        }
    }
    cliques
}

/// Minimum clique partition of `x` when it fits the exact guard, else the greedy cover.
pub fn clique_partition_min(g: &Graph, x: &VertexSet) -> Vec<Vec<usize>> {
    if x.len() > CLIQUE_PARTITION_GUARD {
        return clique_partition_greedy(g, x);
    }
    let greedy = clique_partition_greedy(g, x);
    for kappa in 1..greedy.len() {
        if let Ok(Some(p)) = clique_partition_exact(g, x, kappa) {
            return p;
        }
    }
    greedy
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn triangle_one_clique() {
        let g = complete(3);
        assert_eq!(clique_partition_exact(&g, &VertexSet::full(3), 1).unwrap(), Some(alloc::vec![alloc::vec![0, 1, 2]]));
    }

    #[test]
    fn independent_three_two_cliques() {
        let g = Graph::empty(3);
        assert_eq!(clique_partition_exact(&g, &VertexSet::full(3), 2).unwrap(), None);
        assert_eq!(clique_partition_exact(&g, &VertexSet::full(3), 3).unwrap().unwrap().len(), 3);
    }

    #[test]
    fn guard() {
        let g = Graph::empty(25);
        assert!(clique_partition_exact(&g, &VertexSet::full(25), 25).is_err());
    }

    #[test]
    fn c5_needs_three() {
        let g = cycle(5);
        let x = VertexSet::full(5);
        assert_eq!(clique_partition_exact(&g, &x, 2).unwrap(), None);
        assert_eq!(clique_partition_min(&g, &x).len(), 3);
    }
}
