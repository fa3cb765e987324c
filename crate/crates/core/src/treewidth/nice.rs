use alloc::vec::Vec;

use super::TreeDecomposition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum NiceKind {
    Leaf,
    Introduce { child: usize, v: usize },
    Forget { child: usize, v: usize },
    Join { left: usize, right: usize },
}

#[derive(Clone, Debug)]
pub(crate) struct NiceNode {
    pub kind: NiceKind,
    /// Sorted.
    pub bag: Vec<usize>,
}

/// Nice decomposition in an arena where children precede parents.
/// The last node is the root and its bag is empty; leaves have empty bags.
#[derive(Clone, Debug)]
pub(crate) struct NiceDecomposition {
    pub nodes: Vec<NiceNode>,
}

impl NiceDecomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn build(td: &TreeDecomposition) -> Self {
        let t = td.bags.len();
        let mut nodes: Vec<NiceNode> = Vec::new();
        if t == 0 {
            nodes.push(NiceNode { kind: NiceKind::Leaf, bag: Vec::new() });
            return NiceDecomposition { nodes };
        }
        let adj = td.tree_adjacency();
        let mut parent = alloc::vec![usize::MAX; t];
        let mut order = alloc::vec![0usize];
        parent[0] = 0;
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            for &y in &adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    order.push(y);
                }
            }
            i += 1;
        }
        let mut children: Vec<Vec<usize>> = alloc::vec![Vec::new(); t];
        for &x in order.iter().skip(1) {
            children[parent[x]].push(x);
        }
        let mut top = alloc::vec![usize::MAX; t];
        for &x in order.iter().rev() {
            let target = &td.bags[x];
            let mut heads: Vec<usize> = Vec::new();
            for &c in &children[x] {
                heads.push(morph(&mut nodes, top[c], target));
            }
            if heads.is_empty() {
                nodes.push(NiceNode { kind: NiceKind::Leaf, bag: Vec::new() });
                let leaf = nodes.len() - 1;
                heads.push(morph(&mut nodes, leaf, target));
            }
            let mut acc = heads[0];
            for &h in &heads[1..] {
                nodes.push(NiceNode { kind: NiceKind::Join { left: acc, right: h }, bag: target.clone() });
                acc = nodes.len() - 1;
            }
            top[x] = acc;
        }
        morph(&mut nodes, top[0], &[]);
        NiceDecomposition { nodes }
    }
}

/// Forgets then introduces single vertices until the bag equals `target`.
fn morph(nodes: &mut Vec<NiceNode>, mut at: usize, target: &[usize]) -> usize {
    let current = nodes[at].bag.clone();
    for &v in current.iter().filter(|v| target.binary_search(v).is_err()) {
        let bag: Vec<usize> = nodes[at].bag.iter().copied().filter(|&u| u != v).collect();
        nodes.push(NiceNode { kind: NiceKind::Forget { child: at, v }, bag });
        at = nodes.len() - 1;
    }
    for &v in target.iter().filter(|v| current.binary_search(v).is_err()) {
        let mut bag = nodes[at].bag.clone();
        let pos = bag.binary_search(&v).unwrap_err();
        bag.insert(pos, v);
        nodes.push(NiceNode { kind: NiceKind::Introduce { child: at, v }, bag });
        at = nodes.len() - 1;
    }
    at
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::treewidth::heuristic_decomposition;

    #[test]
    fn every_vertex_forgotten_once() {
        for g in [grid(4, 5), complete(5), cycle(7), crate::graph::Graph::empty(3)] {
            let nice = heuristic_decomposition(&g).to_nice();
            let mut forgotten = alloc::vec![0; g.n()];
            for (i, node) in nice.nodes.iter().enumerate() {
                match node.kind {
                    NiceKind::Forget { child, v } => {
                        assert!(child < i);
                        forgotten[v] += 1;
                    }
                    NiceKind::Introduce { child, .. } => assert!(child < i),
                    NiceKind::Join { left, right } => {
                        assert!(left < i && right < i);
                        assert_eq!(nice.nodes[left].bag, node.bag);
                        assert_eq!(nice.nodes[right].bag, node.bag);
                    }
                    NiceKind::Leaf => assert!(node.bag.is_empty()),
                }
            }
            assert!(forgotten.iter().all(|&c| c == 1));
            assert!(nice.nodes[nice.root()].bag.is_empty());
        }
    }
}
