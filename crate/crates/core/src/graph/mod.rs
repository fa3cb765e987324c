//! The graph substrate shared by every solver: an immutable simple undirected
//! graph, vertex sets, BFS balls, greedy independent sets, connectivity and
//! small vertex separators.

mod connectivity;
pub mod families;
mod independent;
mod set;

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub use connectivity::{find_separator_leq, minimum_separator, vertex_connectivity};
pub use independent::{independence_number_exact, INDEPENDENCE_GUARD};
pub use set::VertexSet;

/// Immutable simple undirected graph on vertices `0..n` with sorted adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: alloc::vec![Vec::new(); n], m: 0 }
    }

    /// Builds a simple graph. Duplicate edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = alloc::vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!("edge ({u}, {v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency_unchecked(adj))
    }

    /// Builds from symmetric adjacency lists, sorting and deduplicating them.
    pub(crate) fn from_adjacency_unchecked(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph { adj, m: twice / 2 }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// Whether the vertices of `set` are pairwise adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Induced subgraph on `vertices`; local vertex `i` is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = alloc::vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v].iter().filter(|&&w| local[w] != usize::MAX).map(|&w| local[w]).collect()
            })
            .collect();
        (Self::from_adjacency_unchecked(adj), vertices.to_vec())
    }

    /// Unit-weight distances from `source`; `usize::MAX` marks unreachable.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        self.bfs_distances_within(source, None, usize::MAX)
    }

    /// BFS restricted to `alive` vertices (all when `None`), stopping after
    /// distance `max_dist`.
    pub(crate) fn bfs_distances_within(
        &self,
        source: usize,
        alive: Option<&VertexSet>,
        max_dist: usize,
    ) -> Vec<usize> {
        let mut dist = alloc::vec![usize::MAX; self.n()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            if dist[u] >= max_dist {
                continue;
            }
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX && alive.is_none_or(|a| a.contains(w)) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = alloc::vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// The BFS ball `{w : dist(v, w) < r}` and its boundary `{w : dist(v, w) = r}`.
pub fn bfs_ball(g: &Graph, v: usize, r: usize) -> (VertexSet, VertexSet) {
    ball_within(g, v, r, None)
}

/// [`bfs_ball`] computed in the subgraph induced by `alive`.
pub(crate) fn ball_within(
    g: &Graph,
    v: usize,
    r: usize,
    alive: Option<&VertexSet>,
) -> (VertexSet, VertexSet) {
    let dist = g.bfs_distances_within(v, alive, r);
    let mut ball = VertexSet::new(g.n());
    let mut boundary = VertexSet::new(g.n());
    for (w, &d) in dist.iter().enumerate() {
        if d < r {
            ball.insert(w);
        } else if d == r {
            boundary.insert(w);
        }
    }
    (ball, boundary)
}

/// Scans `order` and keeps every vertex with no previously kept neighbor.
pub fn greedy_mis(g: &Graph, order: &[usize]) -> Result<VertexSet> {
    check_permutation(g.n(), order)?;
    let mut taken = VertexSet::new(g.n());
    let mut blocked = alloc::vec![false; g.n()];
    for &v in order {
        if !blocked[v] {
            taken.insert(v);
            blocked[v] = true;
            for &w in g.neighbors(v) {
                blocked[w] = true;
            }
        }
    }
    Ok(taken)
}

pub(crate) fn check_permutation(n: usize, order: &[usize]) -> Result<()> {
    if order.len() != n {
        return Err(Error::input(format!("order has {} entries, expected {n}", order.len())));
    }
    let mut seen = alloc::vec![false; n];
    for &v in order {
        if v >= n || core::mem::replace(&mut seen[v], true) {
            return Err(Error::input("order is not a permutation of the vertices"));
        }
    }
    Ok(())
}
