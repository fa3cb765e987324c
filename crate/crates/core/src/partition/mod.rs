//! Greedy κ-partitions, their quotient graphs, and refinement into parts that
//! are cliques or highly connected.

mod clique;
mod config;
mod tree;

use alloc::format;
use alloc::vec::Vec;

pub use clique::{clique_partition_exact, clique_partition_greedy, clique_partition_min, CLIQUE_PARTITION_GUARD};
pub use config::{BlueStrategy, MarkStrategy, SolverConfig, CALIBRATED_C_TW};
pub use tree::{separator_tree, SeparatorNode, SeparatorTree};

use crate::error::{Error, Result};
use crate::graph::{check_permutation, greedy_mis, vertex_connectivity, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartKind {
    Clique,
    /// Vertex connectivity of the induced subgraph is at least the payload.
    Linked(usize),
    Raw,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Kappa,
    Refined,
    /// Some parts were split into singletons after a failed compression.
    Uncompressed,
    Manual,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<Vec<usize>>,
    kinds: Vec<PartKind>,
    part_of: Vec<usize>,
    pub provenance: Provenance,
}

impl Partition {
    /// Builds a partition from explicit parts; each part is sorted.
    pub fn new(n: usize, parts: Vec<Vec<usize>>, kinds: Vec<PartKind>, provenance: Provenance) -> Result<Self> {
        if parts.len() != kinds.len() {
            return Err(Error::input("one kind per part is required"));
        }
        let mut part_of = alloc::vec![usize::MAX; n];
        let mut parts = parts;
        for (i, part) in parts.iter_mut().enumerate() {
            part.sort_unstable();
            if part.is_empty() {
                return Err(Error::input(format!("part {i} is empty")));
            }
            for &v in part.iter() {
                if v >= n {
                    return Err(Error::input(format!("vertex {v} out of range")));
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::input(format!("vertex {v} lies in two parts")));
                }
                part_of[v] = i;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
            return Err(Error::input(format!("vertex {v} is in no part")));
        }
        Ok(Partition { parts, kinds, part_of, provenance })
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            parts: (0..n).map(|v| alloc::vec![v]).collect(),
            kinds: alloc::vec![PartKind::Clique; n],
            part_of: (0..n).collect(),
            provenance: Provenance::Uncompressed,
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn n(&self) -> usize {
        self.part_of.len()
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &[usize] {
        &self.parts[i]
    }

    pub fn kinds(&self) -> &[PartKind] {
        &self.kinds
    }

    pub fn kind(&self, i: usize) -> PartKind {
        self.kinds[i]
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn max_part_size(&self) -> usize {
        self.parts.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Replaces part `i` by singleton clique parts, in place.
    pub fn uncompress(&self, i: usize) -> Partition {
        let mut parts = Vec::with_capacity(self.parts.len() + self.parts[i].len());
        let mut kinds = Vec::with_capacity(parts.capacity());
        for (j, part) in self.parts.iter().enumerate() {
            if j == i {
                for &v in part {
                    parts.push(alloc::vec![v]);
                    kinds.push(PartKind::Clique);
                }
            } else {
                parts.push(part.clone());
                kinds.push(self.kinds[j]);
            }
        }
        let mut part_of = alloc::vec![0; self.n()];
        for (j, part) in parts.iter().enumerate() {
            for &v in part {
                part_of[v] = j;
            }
        }
        Partition { parts, kinds, part_of, provenance: Provenance::Uncompressed }
    }

    /// Checks cover, disjointness, connectivity of parts and each declared kind.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::ContractViolation(format!(
                "partition covers {} vertices, graph has {}",
                self.n(),
                g.n()
            )));
        }
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                if self.part_of[v] != i {
                    return Err(Error::ContractViolation(format!("vertex {v} misfiled")));
                }
            }
            let (sub, _) = g.induced(part);
            if !sub.is_connected() {
                return Err(Error::ContractViolation(format!("part {i} is disconnected")));
            }
            match self.kinds[i] {
                PartKind::Clique if !sub.is_complete() => {
                    return Err(Error::ContractViolation(format!("part {i} marked clique is not complete")));
                }
                PartKind::Linked(c) => {
                    let got = vertex_connectivity(&sub);
                    if got < c {
                        return Err(Error::ContractViolation(format!(
                            "part {i} marked linked:{c} has connectivity {got}"
                        )));
                    }
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn quotient(&self, g: &Graph) -> QuotientGraph {
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .filter_map(|(u, v)| {
                let (a, b) = (self.part_of[u], self.part_of[v]);
                (a != b).then(|| (a.min(b), a.max(b)))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let graph = Graph::from_edges(self.len(), &edges).expect("quotient edges are in range");
        QuotientGraph { graph, sizes: self.parts.iter().map(Vec::len).collect() }
    }
}

/// Contraction of every part to a single vertex, weighted by part size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    pub graph: Graph,
    pub sizes: Vec<usize>,
}

impl QuotientGraph {
    /// Degree of the partition.
    pub fn degree(&self) -> usize {
        self.graph.max_degree()
    }
}

/// One part per vertex of a greedy maximal independent set scanned in `order`;
/// every other vertex joins the part of its smallest-id independent neighbor.
/// Parts are listed by center id.
pub fn kappa_partition(g: &Graph, order: &[usize]) -> Result<(Partition, QuotientGraph)> {
    check_permutation(g.n(), order)?;
    let mis = greedy_mis(g, order)?;
    let centers = mis.to_vec();
    let mut index = alloc::vec![usize::MAX; g.n()];
    for (i, &c) in centers.iter().enumerate() {
        index[c] = i;
    }
    let mut parts: Vec<Vec<usize>> = centers.iter().map(|&c| alloc::vec![c]).collect();
    for v in 0..g.n() {
        if mis.contains(v) {
            continue;
        }
        let c = g.neighbors(v).iter().copied().find(|&u| mis.contains(u)).expect("maximal set dominates");
        parts[index[c]].push(v);
    }
    let kinds = parts.iter().map(|p| if g.is_clique(p) { PartKind::Clique } else { PartKind::Raw }).collect();
    let p = Partition::new(g.n(), parts, kinds, Provenance::Kappa)?;
    let q = p.quotient(g);
    Ok((p, q))
}

/// [`kappa_partition`] with ascending scan order.
pub fn kappa_partition_default(g: &Graph) -> Result<(Partition, QuotientGraph)> {
    let order: Vec<usize> = (0..g.n()).collect();
    kappa_partition(g, &order)
}

/// Per-part summary of a refinement, kept for structural checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementRecord {
    pub source_part: usize,
    pub leaf_count: usize,
    pub interior_size: usize,
    pub interior_cliques: usize,
}

/// Splits every part through its separator tree. Leaves become `Linked` or
/// `Clique` parts; the union of separators is covered by cliques.
pub fn refine_to_linked(g: &Graph, p0: &Partition, cfg: &SolverConfig) -> Result<(Partition, QuotientGraph)> {
    refine_to_linked_traced(g, p0, cfg).map(|(p, q, _)| (p, q))
}

pub fn refine_to_linked_traced(
    g: &Graph,
    p0: &Partition,
    cfg: &SolverConfig,
) -> Result<(Partition, QuotientGraph, Vec<RefinementRecord>)> {
    cfg.validate()?;
    let delta0 = if cfg.theory_mode { p0.quotient(g).degree() } else { 0 };
    let degree_bound = (delta0 + 1) * 2 * cfg.kappa;
    if cfg.theory_mode && cfg.lambda <= degree_bound {
        return Err(Error::ContractViolation(format!(
            "lambda {} must exceed (quotient degree + 1) * 2 * kappa = {degree_bound}",
            cfg.lambda
        )));
    }
    let thr = cfg.g_threshold;
    let mut parts = Vec::new();
    let mut kinds = Vec::new();
    let mut records = Vec::new();
    for (i, part) in p0.parts().iter().enumerate() {
        if g.is_clique(part) {
            parts.push(part.clone());
            kinds.push(PartKind::Clique);
            records.push(RefinementRecord { source_part: i, leaf_count: 1, interior_size: 0, interior_cliques: 0 });
            continue;
        }
        let set = VertexSet::from_iter(g.n(), part.iter().copied());
        let tree = separator_tree(g, &set, thr);
        for leaf in tree.leaves() {
            parts.push(leaf.to_vec());
            kinds.push(if g.is_clique(leaf) { PartKind::Clique } else { PartKind::Linked(thr + 1) });
        }
        let interior = tree.interior_union();
        let cliques = if cfg.theory_mode {
            if tree.leaf_count() > cfg.kappa || interior.len() > (cfg.kappa - 1) * thr {
                return Err(Error::ContractViolation(format!(
                    "part {i}: separator tree has {} leaves and interior {}, beyond kappa {}",
                    tree.leaf_count(),
                    interior.len(),
                    cfg.kappa
                )));
            }
            let x = VertexSet::from_iter(g.n(), interior.iter().copied());
            clique_partition_exact(g, &x, cfg.kappa)?.ok_or_else(|| {
                Error::ContractViolation(format!("part {i}: separator union has no {}-clique partition", cfg.kappa))
            })?
        } else {
            clique_partition_min(g, &VertexSet::from_iter(g.n(), interior.iter().copied()))
        };
        records.push(RefinementRecord {
            source_part: i,
            leaf_count: tree.leaf_count(),
            interior_size: interior.len(),
            interior_cliques: cliques.len(),
        });
        for c in cliques {
            parts.push(c);
            kinds.push(PartKind::Clique);
        }
    }
    let p = Partition::new(g.n(), parts, kinds, Provenance::Refined)?;
    let q = p.quotient(g);
    if cfg.theory_mode && q.degree() > degree_bound {
        return Err(Error::ContractViolation(format!(
            "refined quotient degree {} exceeds {degree_bound}",
            q.degree()
        )));
    }
    Ok((p, q, records))
}
