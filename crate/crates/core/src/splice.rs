//! Turns a vertex sequence valid in the red closure into one valid in `G`.

use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};
use crate::linkage::{find_spanning_linkage, LinkageRequest, LINKAGE_GUARD};
use crate::partition::{PartKind, Partition};

/// Maximal run of consecutive sequence positions inside one part.
struct Run {
    part: usize,
    start: usize,
    end: usize,
}

/// Rewrites `seq` so that consecutive vertices are adjacent in `g`. When `cover`
/// holds, every vertex of every visited part is added. Errors name the part that
/// must be uncompressed.
pub(crate) fn splice(g: &Graph, p: &Partition, mut seq: Vec<usize>, cyclic: bool, cover: bool) -> Result<Vec<usize>, usize> {
    if seq.is_empty() {
        return Ok(seq);
    }
    let len = seq.len();
    if cyclic {
        match (0..len).find(|&i| p.part_of(seq[(i + len - 1) % len]) != p.part_of(seq[i])) {
            Some(r) => seq.rotate_left(r),
            None => {
                // the whole cycle lies in one part
                let part = p.part_of(seq[0]);
                if p.kind(part) == PartKind::Clique && g.is_clique(p.part(part)) {
                    return Ok(p.part(part).to_vec());
                }
                return Err(part);
            }
        }
    }
    let mut runs: Vec<Run> = Vec::new();
    for (i, &v) in seq.iter().enumerate() {
        let part = p.part_of(v);
        match runs.last_mut() {
            Some(r) if r.part == part => r.end = i,
            _ => runs.push(Run { part, start: i, end: i }),
        }
    }
    let mut replaced: Vec<Vec<usize>> = runs.iter().map(|r| seq[r.start..=r.end].to_vec()).collect();
    let mut by_part: Vec<Vec<usize>> = alloc::vec![Vec::new(); p.len()];
    for (ri, r) in runs.iter().enumerate() {
        by_part[r.part].push(ri);
    }
    let n = g.n();
    for (part, run_ids) in by_part.iter().enumerate() {
        if run_ids.is_empty() {
            continue;
        }
        let verts = p.part(part);
        let mut seen = VertexSet::new(n);
        for &ri in run_ids {
            for &v in &replaced[ri] {
                seen.insert(v);
            }
        }
        let missing: Vec<usize> = if cover { verts.iter().copied().filter(|&v| !seen.contains(v)).collect() } else { Vec::new() };
        let red = run_ids.iter().any(|&ri| replaced[ri].windows(2).any(|w| !g.has_edge(w[0], w[1])));
        if !red && missing.is_empty() {
            continue;
        }
        if p.kind(part) == PartKind::Clique {
            if red {
                return Err(part);
            }
            let last = runs.len() - 1;
            let slot = run_ids.iter().copied().find(|&ri| replaced[ri].len() >= 2);
            match slot {
                Some(ri) => {
                    let tail = replaced[ri].split_off(1);
                    replaced[ri].extend(missing);
                    replaced[ri].extend(tail);
                }
                None if !cyclic && run_ids.contains(&last) => replaced[last].extend(missing),
                None if !cyclic && run_ids.contains(&0) => {
                    let mut head = missing;
                    head.append(&mut replaced[0]);
                    replaced[0] = head;
                }
                None => return Err(part),
            }
            continue;
        }
        if verts.len() > LINKAGE_GUARD {
            return Err(part);
        }
        let mut set = VertexSet::from_iter(n, verts.iter().copied());
        let mut pairs = Vec::new();
        let mut paired_runs = Vec::new();
        for &ri in run_ids {
            let r = &replaced[ri];
            if r.len() == 1 {
                set.remove(r[0]);
            } else {
                pairs.push((r[0], r[r.len() - 1]));
                paired_runs.push(ri);
            }
        }
        if pairs.is_empty() {
            return Err(part);
        }
        let Ok(req) = LinkageRequest::new(set, pairs) else { return Err(part) };
        match find_spanning_linkage(g, &req) {
            Ok(Some(linkage)) => {
                for (ri, path) in paired_runs.into_iter().zip(linkage.paths) {
                    replaced[ri] = path;
                }
            }
            _ => return Err(part),
        }
    }
    Ok(replaced.concat())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Provenance;

    #[test]
    fn clique_part_gains_missing_vertices() {
        // triangle {0,1,2} and edge {3,4}; cycle 0-3-4-1 in the closure skips 2
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (1, 4)]).unwrap();
        let p = Partition::new(
            5,
            alloc::vec![alloc::vec![0, 1, 2], alloc::vec![3, 4]],
            alloc::vec![PartKind::Clique, PartKind::Clique],
            Provenance::Manual,
        )
        .unwrap();
        let out = splice(&g, &p, alloc::vec![1, 0, 3, 4], true, true).unwrap();
        assert_eq!(out.len(), 5);
        crate::Certificate::cycle(out).validate_hamiltonian(&g).unwrap();
    }
}
