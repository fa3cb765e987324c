use alloc::vec::Vec;

use super::Graph;
use crate::error::{Error, Result};

/// Largest graph accepted by [`independence_number_exact`].
pub const INDEPENDENCE_GUARD: usize = 30;

/// Exact independence number by branch and bound on bitmasks.
pub fn independence_number_exact(g: &Graph) -> Result<usize> {
    if g.n() > INDEPENDENCE_GUARD {
        return Err(Error::guard("independence_number_exact", INDEPENDENCE_GUARD, g.n()));
    }
    let closed: Vec<u64> = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &w| m | (1 << w)))
        .collect();
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best = 0;
    branch(&closed, all, 0, &mut best);
    Ok(best)
}

fn branch(closed: &[u64], cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    let mut low = (usize::MAX, 0);
    let mut high = (0, 0);
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (closed[v] & cand).count_ones() as usize - 1;
        if d < low.0 {
            low = (d, v);
        }
        if d > high.0 {
            high = (d, v);
        }
    }
    if low.0 <= 1 {
        // a vertex of degree at most one is always in some maximum set
        branch(closed, cand & !closed[low.1], size + 1, best);
        return;
    }
    let v = high.1;
    branch(closed, cand & !closed[v], size + 1, best);
    branch(closed, cand & !(1 << v), size, best);
}
