//! Exact search for vertex-disjoint terminal paths that together span a part.

use alloc::format;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest part accepted by [`find_spanning_linkage`].
pub const LINKAGE_GUARD: usize = 24;
/// Largest part accepted by [`is_hamiltonian_l_linked`].
pub const LINKEDNESS_GUARD: usize = 14;
/// Search steps after which [`find_spanning_linkage`] gives up with a guard error.
pub const LINKAGE_STEP_LIMIT: usize = 4_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkageRequest {
    pub part: VertexSet,
    pub pairs: Vec<(usize, usize)>,
}

impl LinkageRequest {
    pub fn new(part: VertexSet, pairs: Vec<(usize, usize)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::input("a linkage request needs at least one pair"));
        }
        let mut seen = VertexSet::new(part.universe());
        for &(s, t) in &pairs {
            for v in [s, t] {
                if v >= part.universe() || !part.contains(v) {
                    return Err(Error::input(format!("terminal {v} is outside the part")));
                }
                if !seen.insert(v) {
                    return Err(Error::input(format!("terminal {v} is repeated")));
                }
            }
        }
        Ok(LinkageRequest { part, pairs })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linkage {
    pub paths: Vec<Vec<usize>>,
}

impl Linkage {
    /// Endpoints match the pairs, paths are disjoint paths of `G[part]`, and they span the part.
    pub fn validate(&self, g: &Graph, req: &LinkageRequest) -> bool {
        if self.paths.len() != req.pairs.len() {
            return false;
        }
        let mut used = VertexSet::new(req.part.universe());
        for (path, &(s, t)) in self.paths.iter().zip(&req.pairs) {
            if path.first() != Some(&s) || path.last() != Some(&t) {
                return false;
            }
            for (i, &v) in path.iter().enumerate() {
                if !req.part.contains(v) || !used.insert(v) {
                    return false;
                }
                if i > 0 && !g.has_edge(path[i - 1], v) {
                    return false;
                }
            }
        }
        used == req.part
    }
}

/// A spanning linkage for `req`, or `None` when none exists.
///
/// Fails with a guard error when the part exceeds [`LINKAGE_GUARD`] or the
/// search exceeds [`LINKAGE_STEP_LIMIT`] expansions.
pub fn find_spanning_linkage(g: &Graph, req: &LinkageRequest) -> Result<Option<Linkage>> {
    let verts = req.part.to_vec();
    if verts.len() > LINKAGE_GUARD {
        return Err(Error::guard("linkage part size", LINKAGE_GUARD, verts.len()));
    }
    let local = |v: usize| verts.binary_search(&v).expect("terminal inside part");
    let (sub, _) = g.induced(&verts);
    let n = verts.len();
    let adj: Vec<u32> = (0..n).map(|v| sub.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u))).collect();
    let pairs: Vec<(usize, usize)> = req.pairs.iter().map(|&(s, t)| (local(s), local(t))).collect();
    let terminals = pairs.iter().fold(0u32, |m, &(s, t)| m | (1 << s) | (1 << t));
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut dfs = Dfs {
        adj: &adj,
        pairs: &pairs,
        terminals,
        full,
        failed: HashSet::new(),
        path: Vec::new(),
        steps: 0,
    };
    let (s0, _) = pairs[0];
    dfs.path.push(s0);
    match dfs.extend(1 << s0, s0, 0) {
        Err(()) => Err(Error::guard("linkage search steps", LINKAGE_STEP_LIMIT, dfs.steps)),
        Ok(false) => Ok(None),
        Ok(true) => {
            let mut paths = Vec::with_capacity(pairs.len());
            let mut rest = dfs.path.as_slice();
            for &(_, t) in &pairs {
                let end = rest.iter().position(|&v| v == t).expect("path reaches its target");
                paths.push(rest[..=end].iter().map(|&i| verts[i]).collect());
                rest = &rest[end + 1..];
            }
            Ok(Some(Linkage { paths }))
        }
    }
}

struct Dfs<'a> {
    adj: &'a [u32],
    pairs: &'a [(usize, usize)],
    terminals: u32,
    full: u32,
    failed: HashSet<(u32, u8, u8)>,
    /// Concatenation of all paths so far.
    path: Vec<usize>,
    steps: usize,
}

impl Dfs<'_> {
    /// Err on step exhaustion.
    fn extend(&mut self, visited: u32, at: usize, j: usize) -> core::result::Result<bool, ()> {
        self.steps += 1;
        if self.steps > LINKAGE_STEP_LIMIT {
            return Err(());
        }
        let (_, t) = self.pairs[j];
        if at == t {
            if j + 1 == self.pairs.len() {
                return Ok(visited == self.full);
            }
            let (s, _) = self.pairs[j + 1];
            self.path.push(s);
            if self.extend(visited | 1 << s, s, j + 1)? {
                return Ok(true);
            }
            self.path.pop();
            return Ok(false);
        }
        let key = (visited, at as u8, j as u8);
        if self.failed.contains(&key) {
            return Ok(false);
        }
        let mut options = self.adj[at] & !visited & (!self.terminals | 1 << t);
        while options != 0 {
            let v = options.trailing_zeros() as usize;
            options &= options - 1;
            self.path.push(v);
            if self.extend(visited | 1 << v, v, j)? {
                return Ok(true);
            }
            self.path.pop();
        }
        self.failed.insert(key);
        Ok(false)
    }
}

/// True iff every choice of `l` disjoint terminal pairs in `part` admits a spanning linkage.
pub fn is_hamiltonian_l_linked(g: &Graph, part: &VertexSet, l: usize) -> Result<bool> {
    let verts = part.to_vec();
    if verts.len() > LINKEDNESS_GUARD {
        return Err(Error::guard("linkedness part size", LINKEDNESS_GUARD, verts.len()));
    }
    if l == 0 || 2 * l > verts.len() {
        return Ok(true);
    }
    let mut chosen = Vec::with_capacity(2 * l);
    let mut ok = true;
    for_each_subset(&verts, 2 * l, 0, &mut chosen, &mut |terms| {
        for_each_matching(terms, &mut Vec::new(), &mut |pairs| {
            let req = LinkageRequest { part: part.clone(), pairs: pairs.to_vec() };
            match find_spanning_linkage(g, &req) {
                Ok(Some(_)) => true,
                _ => {
                    ok = false;
                    false
                }
            }
        })
    });
    Ok(ok)
}

/// Calls `f` on every `size`-subset; stops when `f` returns false.
fn for_each_subset(
    items: &[usize],
    size: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if chosen.len() == size {
        return f(chosen);
    }
    for i in from..items.len() {
        if items.len() - i < size - chosen.len() {
            break;
        }
        chosen.push(items[i]);
        let go = for_each_subset(items, size, i + 1, chosen, f);
        chosen.pop();
        if !go {
            return false;
        }
    }
    true
}

/// Calls `f` on every perfect matching of `items`; stops when `f` returns false.
fn for_each_matching(
    items: &[usize],
    acc: &mut Vec<(usize, usize)>,
    f: &mut dyn FnMut(&[(usize, usize)]) -> bool,
) -> bool {
    if items.is_empty() {
        return f(acc);
    }
    let first = items[0];
    for i in 1..items.len() {
        let rest: Vec<usize> = items[1..].iter().copied().filter(|&x| x != items[i]).collect();
        acc.push((first, items[i]));
        let go = for_each_matching(&rest, acc, f);
        acc.pop();
        if !go {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn req(n: usize, pairs: &[(usize, usize)]) -> LinkageRequest {
        LinkageRequest::new(VertexSet::full(n), pairs.to_vec()).unwrap()
    }

    #[test]
    fn k4_two_pairs() {
        let r = req(4, &[(0, 1), (2, 3)]);
        let l = find_spanning_linkage(&complete(4), &r).unwrap().unwrap();
        assert_eq!(l.paths, [alloc::vec![0, 1], alloc::vec![2, 3]]);
        assert!(l.validate(&complete(4), &r));
    }

    #[test]
    fn c6_opposite_pair_fails() {
        assert_eq!(find_spanning_linkage(&cycle(6), &req(6, &[(0, 3)])).unwrap(), None);
        assert!(find_spanning_linkage(&cycle(6), &req(6, &[(0, 1)])).unwrap().is_some());
    }

    #[test]
    fn k6_hamiltonian_pair() {
        let l = find_spanning_linkage(&complete(6), &req(6, &[(0, 1)])).unwrap().unwrap();
        assert_eq!(l.paths, [alloc::vec![0, 2, 3, 4, 5, 1]]);
    }

    #[test]
    fn linkedness_examples() {
        assert!(is_hamiltonian_l_linked(&complete(4), &VertexSet::full(4), 1).unwrap());
        assert!(!is_hamiltonian_l_linked(&cycle(6), &VertexSet::full(6), 1).unwrap());
        assert!(is_hamiltonian_l_linked(&complete(6), &VertexSet::full(6), 2).unwrap());
        assert!(is_hamiltonian_l_linked(&complete(15), &VertexSet::full(15), 1).is_err());
    }

    #[test]
    fn bad_requests() {
        assert!(LinkageRequest::new(VertexSet::full(4), alloc::vec![(0, 0)]).is_err());
        assert!(LinkageRequest::new(VertexSet::full(4), Vec::new()).is_err());
        assert!(LinkageRequest::new(VertexSet::from_iter(6, [0, 1]), alloc::vec![(0, 5)]).is_err());
    }
}
