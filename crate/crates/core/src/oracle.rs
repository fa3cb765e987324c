//! Brute-force references. Every routine has a hard size guard.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const HELD_KARP_GUARD: usize = 20;
pub const LONGEST_PATH_GUARD: usize = 18;
pub const TREEWIDTH_GUARD: usize = 12;
pub const SEPARATOR_GUARD: usize = 18;

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u)).collect()
}

/// `reach[mask]` holds the possible last vertices of a path visiting exactly `mask`.
fn path_table(nb: &[u32], starts: u32) -> Vec<u32> {
    let n = nb.len();
    let mut reach = alloc::vec![0u32; 1 << n];
    for v in 0..n {
        if starts >> v & 1 == 1 {
            reach[1 << v] |= 1 << v;
        }
    }
    for mask in 1..reach.len() {
        let mut ends = reach[mask];
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut next = nb[v] & !(mask as u32);
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[mask | 1 << u] |= 1 << u;
            }
        }
    }
    reach
}

/// Walks back from `(mask, end)` to a start in `starts`, smallest ids first.
fn unwind(reach: &[u32], nb: &[u32], mut mask: u32, mut end: usize) -> Vec<usize> {
    let mut seq = alloc::vec![end];
    while mask.count_ones() > 1 {
        let prev_mask = mask & !(1 << end);
        let cand = reach[prev_mask as usize] & nb[end];
        let prev = cand.trailing_zeros() as usize;
        seq.push(prev);
        mask = prev_mask;
        end = prev;
    }
    seq.reverse();
    seq
}

pub fn held_karp_cycle(g: &Graph) -> Result<Option<Certificate>> {
    let n = g.n();
    if n > HELD_KARP_GUARD {
        return Err(Error::guard("held-karp vertex count", HELD_KARP_GUARD, n));
    }
    if n < 3 {
        return Ok(None);
    }
    let nb = masks(g);
    let reach = path_table(&nb, 1);
    let full = (1u32 << n) - 1;
    let closing = reach[full as usize] & nb[0];
    if closing == 0 {
        return Ok(None);
    }
    let end = closing.trailing_zeros() as usize;
    Ok(Some(Certificate::cycle(unwind(&reach, &nb, full, end))))
}

pub fn held_karp_path(g: &Graph) -> Result<Option<Certificate>> {
    let n = g.n();
    if n > HELD_KARP_GUARD {
        return Err(Error::guard("held-karp vertex count", HELD_KARP_GUARD, n));
    }
    if n == 0 {
        return Ok(None);
    }
    let nb = masks(g);
    let full = (1u32 << n) - 1;
    let reach = path_table(&nb, full);
    let ends = reach[full as usize];
    if ends == 0 {
        return Ok(None);
    }
    Ok(Some(Certificate::path(unwind(&reach, &nb, full, ends.trailing_zeros() as usize))))
}

/// Maximum total weight of a simple path (unit weights when `weights` is absent).
pub fn longest_path_exact(g: &Graph, weights: Option<&[u64]>) -> Result<(u64, Certificate)> {
    let n = g.n();
    if n > LONGEST_PATH_GUARD {
        return Err(Error::guard("longest-path vertex count", LONGEST_PATH_GUARD, n));
    }
    if n == 0 {
        return Ok((0, Certificate::path(Vec::new())));
    }
    let w = |v: usize| weights.map_or(1, |ws| ws[v]);
    let nb = masks(g);
    let reach = path_table(&nb, (1u32 << n) - 1);
    let mut best = (0u64, 0u32, 0usize);
    for (mask, &ends) in reach.iter().enumerate() {
        if ends == 0 {
            continue;
        }
        let total: u64 = (0..n).filter(|&v| mask >> v & 1 == 1).map(w).sum();
        if total > best.0 || best.1 == 0 {
            best = (total, mask as u32, ends.trailing_zeros() as usize);
        }
    }
    Ok((best.0, Certificate::path(unwind(&reach, &nb, best.1, best.2))))
}

/// Exact treewidth by dynamic programming over vertex subsets.
pub fn treewidth_exact(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > TREEWIDTH_GUARD {
        return Err(Error::guard("exact treewidth vertex count", TREEWIDTH_GUARD, n));
    }
    if n == 0 {
        return Ok(0);
    }
    let nb = masks(g);
    // q(s, v): vertices outside s ∪ {v} reachable from v through s
    let q = |s: u32, v: usize| -> u32 {
        let mut seen = 1u32 << v;
        let mut frontier = 1u32 << v;
        let mut outside = 0u32;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let step = nb[x] & !seen;
            seen |= step;
            outside |= step & !s;
            frontier |= step & s;
        }
        outside.count_ones()
    };
    let mut tw = alloc::vec![u32::MAX; 1 << n];
    tw[0] = 0;
    for s in 1u32..(1 << n) {
        let mut bits = s;
        let mut best = u32::MAX;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            best = best.min(tw[rest as usize].max(q(rest, v)));
        }
        tw[s as usize] = best;
    }
    Ok(tw[(1usize << n) - 1] as usize)
}

/// Smallest separator of `G[x]` of size at most `s` by exhaustive enumeration,
/// by size then lexicographically.
pub fn separator_enum(g: &Graph, x: &VertexSet, s: usize) -> Result<Option<VertexSet>> {
    let verts = x.to_vec();
    if verts.len() > SEPARATOR_GUARD {
        return Err(Error::guard("separator enumeration set size", SEPARATOR_GUARD, verts.len()));
    }
    let (sub, _) = g.induced(&verts);
    let nb = masks(&sub);
    let m = verts.len();
    let full = if m == 0 { 0 } else { (1u32 << m) - 1 };
    let connected = |alive: u32| -> bool {
        if alive == 0 {
            return true;
        }
        let mut seen = alive & alive.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let step = nb[x] & alive & !seen;
            seen |= step;
            frontier |= step;
        }
        seen == alive
    };
    for size in 0..=s.min(m) {
        let mut found = None;
        subsets(m, size, &mut |sep| {
            if !connected(full & !sep) {
                found = Some(sep);
                return false;
            }
            true
        });
        if let Some(sep) = found {
            return Ok(Some(VertexSet::from_iter(g.n(), (0..m).filter(|&i| sep >> i & 1 == 1).map(|i| verts[i]))));
        }
    }
    Ok(None)
}

/// Enumerates `size`-subsets of `0..m` as masks in lexicographic order of members.
fn subsets(m: usize, size: usize, f: &mut dyn FnMut(u32) -> bool) {
    fn go(from: usize, m: usize, left: usize, acc: u32, f: &mut dyn FnMut(u32) -> bool) -> bool {
        if left == 0 {
            return f(acc);
        }
        for i in from..m {
            if m - i < left {
                break;
            }
            if !go(i + 1, m, left - 1, acc | 1 << i, f) {
                return false;
            }
        }
        true
    }
    go(0, m, size, 0, f);
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("pairs are in range")
}

/// Disjoint cliques of the given sizes, with vertex labels shuffled, joined by
/// `cross` distinct random edges between different cliques. Returns the graph
/// and the planted cliques.
pub fn planted_clique_partition(sizes: &[usize], cross: usize, seed: u64) -> (Graph, Vec<Vec<usize>>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n: usize = sizes.iter().sum();
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(&mut rng);
    let mut cliques = Vec::new();
    let mut at = 0;
    for &s in sizes {
        let mut c = labels[at..at + s].to_vec();
        c.sort_unstable();
        cliques.push(c);
        at += s;
    }
    let mut owner = alloc::vec![0; n];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            owner[v] = i;
        }
    }
    let mut edges = Vec::new();
    for c in &cliques {
        for (i, &u) in c.iter().enumerate() {
            for &v in &c[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    let mut candidates: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| owner[u] != owner[v]).collect();
    candidates.shuffle(&mut rng);
    edges.extend(candidates.into_iter().take(cross));
    (Graph::from_edges(n, &edges).expect("pairs are in range"), cliques)
}
