use alloc::vec::Vec;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexSet};

pub(crate) fn log2(x: f64) -> f64 {
    libm::log2(x)
}

/// Radius cap of the outer cover: `ceil(outer_c * k * log2 k)`.
pub fn outer_radius_cap(k: usize, outer_c: f64) -> usize {
    let k = k as f64;
    (libm::ceil(outer_c * k * log2(k)) as usize).max(1)
}

/// Number of trials up to and including the first success, capped.
fn geometric(rng: &mut ChaCha8Rng, p: f64, cap: usize) -> usize {
    let p = p.clamp(0.0, 1.0);
    let mut r = 1;
    while r < cap && !rng.gen_bool(p) {
        r += 1;
    }
    r
}

/// BFS layers from `v` inside `alive`: returns (distance < r, distance == r).
fn ball_and_boundary(g: &Graph, v: usize, r: usize, alive: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let dist = g.bfs_distances_within(v, Some(alive), r);
    let mut ball = Vec::new();
    let mut boundary = Vec::new();
    for (u, &d) in dist.iter().enumerate() {
        if d < r {
            ball.push(u);
        } else if d == r {
            boundary.push(u);
        }
    }
    (ball, boundary)
}

/// Iterative ball carving: lowest remaining vertex, geometric radius with
/// success probability `1/(2k)` capped at [`outer_radius_cap`]; the ball is
/// kept and its boundary deleted.
pub fn outer_cover(g: &Graph, k: usize, seed: u64) -> VertexSet {
    outer_cover_with(g, k, seed, 4.0)
}

pub fn outer_cover_with(g: &Graph, k: usize, seed: u64, outer_c: f64) -> VertexSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = 1.0 / (2.0 * k.max(1) as f64);
    let cap = outer_radius_cap(k.max(2), outer_c);
    let mut alive = VertexSet::full(g.n());
    let mut a = VertexSet::new(g.n());
    while let Some(v) = alive.first() {
        let r = geometric(&mut rng, p, cap);
        let (ball, boundary) = ball_and_boundary(g, v, r, &alive);
        for &u in &ball {
            a.insert(u);
            alive.remove(u);
        }
        for &u in &boundary {
            alive.remove(u);
        }
    }
    a
}

/// Exponents of the pattern cover for a given `k` and dimension.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoverParams {
    /// Success probability of the radius draw, `min(1, k^(-1/d) log2 k)`.
    pub p: f64,
    /// Radius cap `ceil(c_r * k^(1/d))`.
    pub r_cap: usize,
    /// Boundary budget `ceil(k^(1-1/d) log2 k)`.
    pub l_cap: usize,
    /// Uncapped `k^(-1/d) log2 k`, the ratio in the bad-radius inequality.
    pub ratio: f64,
}

impl CoverParams {
    pub fn new(k: usize, d: usize, c_r: f64) -> Self {
        let kf = k as f64;
        let inv = 1.0 / d as f64;
        let ratio = libm::pow(kf, -inv) * log2(kf);
        CoverParams {
            p: ratio.min(1.0),
            ratio,
            r_cap: (libm::ceil(c_r * libm::pow(kf, inv)) as usize).max(1),
            l_cap: (libm::ceil(libm::pow(kf, 1.0 - inv) * log2(kf)) as usize).max(1),
        }
    }

    /// `k^(1-1/d) log2 k`, the scale of the treewidth bound.
    pub fn width_scale(k: usize, d: usize) -> f64 {
        let kf = k as f64;
        libm::pow(kf, 1.0 - 1.0 / d as f64) * log2(kf)
    }
}

/// One carving step of [`pattern_cover`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cluster {
    pub center: usize,
    pub radius: usize,
    pub ball_size: usize,
    pub boundary_size: usize,
    /// Boundary vertices moved to the pool in this step.
    pub sampled: usize,
    /// Radii `r <= R` violating the bad-radius inequality for the planted set, when one was given.
    pub bad_radii: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSample {
    pub a: VertexSet,
    pub clusters: Vec<Cluster>,
    /// Sampled boundary vertices.
    pub pool: Vec<usize>,
    pub aborted: bool,
    pub seed: u64,
}

/// Randomized clustering whose output has small treewidth while containing a
/// fixed small vertex set with non-negligible probability.
pub fn pattern_cover(g: &Graph, k: usize, seed: u64, params: &CoverParams) -> CoverSample {
    pattern_cover_traced(g, k, seed, params, None)
}

/// [`pattern_cover`] that also counts bad radii with respect to `planted` in
/// every step. The random choices are identical.
pub fn pattern_cover_traced(
    g: &Graph,
    k: usize,
    seed: u64,
    params: &CoverParams,
    planted: Option<&VertexSet>,
) -> CoverSample {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut alive = VertexSet::full(n);
    let mut a = VertexSet::new(n);
    let mut pool = Vec::new();
    let mut clusters = Vec::new();
    let sample_prob = 1.0 / (k.max(1) as f64 * n.max(1) as f64);
    let ratio = params.ratio;
    while let Some(v) = alive.first() {
        let bad_radii = planted.map(|x| count_bad_radii(g, v, &alive, x, params.r_cap, ratio));
        let r = geometric(&mut rng, params.p, params.r_cap);
        let (ball, boundary) = ball_and_boundary(g, v, r, &alive);
        let mut sampled = 0;
        if rng.gen_bool(sample_prob.min(1.0)) {
            let l = rng.gen_range(1..=params.l_cap).min(boundary.len());
            for i in sample(&mut rng, boundary.len(), l).into_vec() {
                pool.push(boundary[i]);
            }
            sampled = l;
        }
        for &u in &ball {
            a.insert(u);
            alive.remove(u);
        }
        for &u in &boundary {
            alive.remove(u);
        }
        clusters.push(Cluster {
            center: v,
            radius: r,
            ball_size: ball.len(),
            boundary_size: boundary.len(),
            sampled,
            bad_radii,
        });
    }
    pool.sort_unstable();
    let aborted = pool.len() > params.l_cap;
    if aborted {
        a.clear();
    } else {
        for &u in &pool {
            a.insert(u);
        }
    }
    CoverSample { a, clusters, pool, aborted, seed }
}

fn count_bad_radii(g: &Graph, v: usize, alive: &VertexSet, x: &VertexSet, r_cap: usize, ratio: f64) -> usize {
    let dist = g.bfs_distances_within(v, Some(alive), r_cap + 1);
    let mut layer = alloc::vec![0usize; r_cap + 2];
    for u in x.iter() {
        let d = dist[u];
        if d <= r_cap {
            layer[d] += 1;
        }
    }
    let mut inside = 0usize;
    let mut bad = 0;
    for r in 1..=r_cap {
        inside += layer[r - 1];
        if layer[r] as f64 > ratio * inside as f64 {
            bad += 1;
        }
    }
    bad
}

/// Smallest `c` with `c x <= log2(1 + x)` for `x = k^(-1/d) log2 k`, `k` in `1..=k_max`.
pub fn bad_radius_constant(d: usize, k_max: usize) -> f64 {
    let mut c: f64 = 1.0;
    for k in 2..=k_max {
        let x = CoverParams::width_scale(k, d) / k as f64;
        if x > 0.0 {
            c = c.min(log2(1.0 + x) / x);
        }
    }
    c
}

/// Reported bound on bad radii per step: `ceil(k^(1/d) / c1)`.
pub fn bad_radius_bound(k: usize, d: usize, c1: f64) -> usize {
    libm::ceil(libm::pow(k as f64, 1.0 / d as f64) / c1) as usize
}
