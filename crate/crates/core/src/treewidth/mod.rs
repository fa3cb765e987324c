//! Tree decompositions: validation, min-fill construction, lifting through a
//! partition, and conversion to nice form for the dynamic programs.

mod nice;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

pub(crate) use nice::{NiceDecomposition, NiceKind};

/// Tree of bags over a host graph with vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Bags are sorted on construction. Tree edges index into `bags`.
    pub fn new(mut bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Result<Self> {
        for b in &mut bags {
            b.sort_unstable();
            b.dedup();
        }
        if edges.iter().any(|&(a, b)| a >= bags.len() || b >= bags.len()) {
            return Err(Error::input("tree edge refers to a missing bag"));
        }
        Ok(TreeDecomposition { bags, edges })
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Largest bag size minus one; 0 for a decomposition of the empty graph.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// Largest total weight of a bag.
    pub fn weighted_width(&self, gamma: &[f64]) -> f64 {
        self.bags.iter().map(|b| b.iter().map(|&v| gamma[v]).sum::<f64>()).fold(0.0, f64::max)
    }

    fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = alloc::vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// True iff the tree is a tree and the cover, edge and connectivity axioms hold.
    pub fn validate(&self, g: &Graph) -> bool {
        let t = self.bags.len();
        if t == 0 {
            return g.n() == 0;
        }
        if self.edges.len() != t - 1 {
            return false;
        }
        let adj = self.tree_adjacency();
        let mut seen = alloc::vec![false; t];
        let mut stack = alloc::vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return false;
        }
        let mut holders: Vec<Vec<usize>> = alloc::vec![Vec::new(); g.n()];
        for (i, b) in self.bags.iter().enumerate() {
            for &v in b {
                if v >= g.n() {
                    return false;
                }
                holders[v].push(i);
            }
        }
        if holders.iter().any(Vec::is_empty) {
            return false;
        }
        for (u, v) in g.edges() {
            if !holders[u].iter().any(|&i| self.bags[i].binary_search(&v).is_ok()) {
                return false;
            }
        }
        // holders[v] must induce a connected subtree
        let mut mark = alloc::vec![usize::MAX; t];
        for (v, hs) in holders.iter().enumerate() {
            for &i in hs {
                mark[i] = v;
            }
            let mut reached = 1;
            let mut stack = alloc::vec![hs[0]];
            let mut visited = alloc::vec![hs[0]];
            mark[hs[0]] = usize::MAX - 1;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if mark[y] == v {
                        mark[y] = usize::MAX - 1;
                        reached += 1;
                        stack.push(y);
                        visited.push(y);
                    }
                }
            }
            if reached != hs.len() {
                return false;
            }
            for &i in hs {
                mark[i] = usize::MAX;
            }
        }
        true
    }

    pub(crate) fn to_nice(&self) -> NiceDecomposition {
        NiceDecomposition::build(self)
    }
}

/// Min-fill elimination order; ties go to the smaller vertex id.
pub fn min_fill_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut adj: Vec<HashSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let fill_of = |adj: &[HashSet<usize>], v: usize| -> usize {
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        let mut missing = 0;
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if !adj[nb[i]].contains(&nb[j]) {
                    missing += 1;
                }
            }
        }
        missing
    };
    let mut fill: Vec<usize> = (0..n).map(|v| fill_of(&adj, v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (fill[v], v)).collect();
    let mut alive = alloc::vec![true; n];
    let mut order = Vec::with_capacity(n);
    while let Some((_, v)) = queue.pop_first() {
        alive[v] = false;
        order.push(v);
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for &a in &nb {
            adj[a].remove(&v);
        }
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                let (a, b) = (nb[i], nb[j]);
                if adj[a].insert(b) {
                    adj[b].insert(a);
                }
            }
        }
        let mut touched: HashSet<usize> = HashSet::new();
        for &a in &nb {
            touched.insert(a);
            touched.extend(adj[a].iter().copied());
        }
        for u in touched {
            if !alive[u] {
                continue;
            }
            let f = fill_of(&adj, u);
            if f != fill[u] {
                queue.remove(&(fill[u], u));
                fill[u] = f;
                queue.insert((f, u));
            }
        }
        adj[v].clear();
    }
    order
}

/// Decomposition induced by an elimination order: the bag of `v` is `v` plus its
/// later neighbors in the filled graph, attached to the bag of the earliest of them.
pub fn decomposition_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition { bags: alloc::vec![Vec::new()], edges: Vec::new() };
    }
    let mut pos = alloc::vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut parent_vertex = Vec::with_capacity(n);
    for &v in order {
        let later: Vec<usize> = adj[v].iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        for i in 0..later.len() {
            for j in i + 1..later.len() {
                adj[later[i]].insert(later[j]);
                adj[later[j]].insert(later[i]);
            }
        }
        let mut bag = later.clone();
        bag.push(v);
        bags.push(bag);
        parent_vertex.push(later.iter().copied().min_by_key(|&u| pos[u]));
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut roots = Vec::new();
    for (i, p) in parent_vertex.iter().enumerate() {
        match p {
            Some(u) => edges.push((i, pos[*u])),
            None => roots.push(i),
        }
    }
    // distinct components share no vertex, so their roots may be chained
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    TreeDecomposition::new(bags, edges).expect("bag indices in range")
}

/// Min-fill decomposition of `g`.
pub fn heuristic_decomposition(g: &Graph) -> TreeDecomposition {
    decomposition_from_order(g, &min_fill_order(g))
}

/// Replaces every quotient vertex in every bag by its part.
pub fn lift(td_q: &TreeDecomposition, p: &Partition) -> TreeDecomposition {
    let bags = td_q.bags.iter().map(|b| b.iter().flat_map(|&i| p.part(i).iter().copied()).collect()).collect();
    TreeDecomposition::new(bags, td_q.edges.clone()).expect("same tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn single_bag_triangle() {
        let td = TreeDecomposition::new(alloc::vec![alloc::vec![0, 1, 2]], Vec::new()).unwrap();
        assert!(td.validate(&complete(3)));
        assert_eq!(td.width(), 2);
    }

    #[test]
    fn uncovered_edge_rejected() {
        let td = TreeDecomposition::new(alloc::vec![alloc::vec![0, 1], alloc::vec![2]], alloc::vec![(0, 1)]).unwrap();
        assert!(!td.validate(&path(3)));
    }

    #[test]
    fn disconnected_subtree_rejected() {
        let td = TreeDecomposition::new(
            alloc::vec![alloc::vec![0, 1], alloc::vec![1, 2], alloc::vec![0, 2]],
            alloc::vec![(0, 1), (1, 2)],
        )
        .unwrap();
        assert!(!td.validate(&cycle(3)));
    }

    #[test]
    fn heuristic_widths() {
        let t = heuristic_decomposition(&path(9));
        assert!(t.validate(&path(9)));
        assert_eq!(t.width(), 1);
        let k = heuristic_decomposition(&complete(6));
        assert_eq!(k.width(), 5);
        let g = grid(5, 5);
        let d = heuristic_decomposition(&g);
        assert!(d.validate(&g));
        assert!(d.width() <= 6, "width {}", d.width());
        let e = Graph::empty(4);
        let de = heuristic_decomposition(&e);
        assert!(de.validate(&e));
        assert_eq!(de.width(), 0);
    }

    #[test]
    fn weighted_width_units() {
        let g = grid(3, 4);
        let td = heuristic_decomposition(&g);
        assert_eq!(td.weighted_width(&[1.0; 12]), (td.width() + 1) as f64);
        assert_eq!(td.weighted_width(&[0.0; 12]), 0.0);
    }

    #[test]
    fn lift_c6() {
        use crate::partition::kappa_partition_default;
        let g = cycle(6);
        let (p, q) = kappa_partition_default(&g).unwrap();
        let tq = heuristic_decomposition(&q.graph);
        let lifted = lift(&tq, &p);
        assert!(lifted.validate(&g));
        assert!(lifted.width() <= 5);
    }
}
