//! Vertex connectivity and minimum vertex separators through unit
//! vertex-capacity maximum flow (Menger), with Even's pair-scanning order.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::{Graph, VertexSet};

/// Residual network of the vertex-split graph: vertex `v` becomes `2v` (in)
/// and `2v + 1` (out) joined by a unit arc.
struct SplitNetwork {
    to: Vec<usize>,
    cap: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph, s: usize, t: usize) -> Self {
        let big = g.n() as u32 + 1;
        let mut net = SplitNetwork { to: Vec::new(), cap: Vec::new(), out: alloc::vec![Vec::new(); 2 * g.n()] };
        for v in 0..g.n() {
            let c = if v == s || v == t { big } else { 1 };
            net.arc(2 * v, 2 * v + 1, c);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, big);
            net.arc(2 * v + 1, 2 * u, big);
        }
        net
    }

    fn arc(&mut self, a: usize, b: usize, c: u32) {
        self.out[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.out[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    /// Pushes one unit along a shortest augmenting path; false when none exists.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut pred = alloc::vec![usize::MAX; self.out.len()];
        let mut seen = alloc::vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    pred[y] = a;
                    if y == sink {
                        let mut z = sink;
                        while z != source {
                            let a = pred[z];
                            self.cap[a] -= 1;
                            self.cap[a ^ 1] += 1;
                            z = self.to[a ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }

    fn reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = alloc::vec![false; self.out.len()];
        seen[source] = true;
        let mut stack = alloc::vec![source];
        while let Some(x) = stack.pop() {
            for &a in &self.out[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

/// Minimum vertex cut between nonadjacent `s` and `t`, or `None` when more
/// than `limit` vertex-disjoint paths exist.
fn min_st_cut(g: &Graph, s: usize, t: usize, limit: usize) -> Option<Vec<usize>> {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = SplitNetwork::new(g, s, t);
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while net.augment(source, sink) {
        flow += 1;
        if flow > limit {
            return None;
        }
    }
    let reach = net.reachable(source);
    let cut: Vec<usize> = (0..g.n()).filter(|&v| reach[2 * v] && !reach[2 * v + 1]).collect();
    debug_assert_eq!(cut.len(), flow);
    Some(cut)
}

/// First minimum separator of size at most `limit` in Even's scan order
/// (`v_i` against every later nonadjacent `v_j`, for `i` up to the current
/// bound). `g` must be connected and not complete.
fn scan_min_separator(g: &Graph, limit: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut bound = limit + 1;
    let mut best = None;
    let mut i = 0;
    while i < n && i <= bound {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            if let Some(cut) = min_st_cut(g, i, j, bound - 1) {
                bound = cut.len();
                best = Some(cut);
                if bound == 0 {
                    return best;
                }
            }
        }
        i += 1;
    }
    best
}

/// Size of a minimum vertex separator; `n - 1` for complete graphs and `0` for
/// disconnected ones.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    if !g.is_connected() {
        return 0;
    }
    scan_min_separator(g, n).map_or(n - 1, |c| c.len())
}

/// A minimum vertex separator of a connected non-complete graph.
pub fn minimum_separator(g: &Graph) -> Option<Vec<usize>> {
    if g.is_complete() || !g.is_connected() {
        return None;
    }
    scan_min_separator(g, g.n())
}

/// A minimum separator of `g[induced_on]` when its size is at most `s`.
///
/// `None` means `g[induced_on]` is complete or `(s + 1)`-connected.
pub fn find_separator_leq(g: &Graph, induced_on: &VertexSet, s: usize) -> Option<VertexSet> {
    let verts = induced_on.to_vec();
    let (h, map) = g.induced(&verts);
    if h.is_complete() {
        return None;
    }
    let cut = scan_min_separator(&h, s)?;
    Some(VertexSet::from_iter(g.n(), cut.into_iter().map(|i| map[i])))
}
