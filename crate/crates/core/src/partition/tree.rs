use alloc::vec::Vec;

use crate::graph::{find_separator_leq, Graph, VertexSet};

/// Recursive decomposition of `G[X]` by small separators. Node 0 is the root;
/// internal nodes carry separators, leaves carry sets without a separator of
/// size at most the threshold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorTree {
    pub nodes: Vec<SeparatorNode>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorNode {
    pub label: Vec<usize>,
    pub children: Vec<usize>,
}

impl SeparatorNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

impl SeparatorTree {
    pub fn leaves(&self) -> impl Iterator<Item = &[usize]> {
        self.nodes.iter().filter(|n| n.is_leaf()).map(|n| n.label.as_slice())
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.is_leaf()).count()
    }

    /// Union of all separator labels, sorted.
    pub fn interior_union(&self) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.nodes.iter().filter(|n| !n.is_leaf()).flat_map(|n| n.label.iter().copied()).collect();
        out.sort_unstable();
        out
    }
}

/// Builds the separator tree of `G[x]` (which must be connected).
pub fn separator_tree(g: &Graph, x: &VertexSet, g_threshold: usize) -> SeparatorTree {
    let mut nodes = alloc::vec![SeparatorNode { label: Vec::new(), children: Vec::new() }];
    let mut work = alloc::vec![(0usize, x.clone())];
    while let Some((id, set)) = work.pop() {
        match find_separator_leq(g, &set, g_threshold) {
            None => nodes[id].label = set.to_vec(),
            Some(sep) => {
                let mut rest = set.clone();
                rest.difference_with(&sep);
                let (sub, map) = g.induced(&rest.to_vec());
                nodes[id].label = sep.to_vec();
                for comp in sub.components() {
                    let child = nodes.len();
                    nodes.push(SeparatorNode { label: Vec::new(), children: Vec::new() });
                    nodes[id].children.push(child);
                    work.push((child, VertexSet::from_iter(g.n(), comp.into_iter().map(|i| map[i]))));
                }
            }
        }
    }
    SeparatorTree { nodes }
}
