//! Long path through weighted contraction, randomized covering of the
//! contracted graph by low-treewidth vertex sets, and an exact weighted path
//! dynamic program on each sampled set. A returned path is always valid; a
//! missing path after the repetition budget is a probabilistic NO unless the
//! sampled set was the whole contracted graph.

mod cover;
mod weighted;

use alloc::vec::Vec;

use hashbrown::HashSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use cover::{
    bad_radius_bound, bad_radius_constant, outer_cover, outer_cover_with, outer_radius_cap, pattern_cover,
    pattern_cover_traced, Cluster, CoverParams, CoverSample,
};
pub use weighted::{build_weighted, mark, mark_cap, Marking, Origin, WeightedCompressed};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hamilton::red_closure;
use crate::partition::{kappa_partition_default, refine_to_linked, SolverConfig};
use crate::pathdp::{self, Mode};
use crate::splice::splice;
use crate::treewidth::{heuristic_decomposition, TreeDecomposition};

/// A path of total weight at least `k` in `h`, if one exists.
pub fn weighted_longpath_dp(h: &Graph, weights: &[u64], td: &TreeDecomposition, k: u64) -> Option<Certificate> {
    match pathdp::solve(h, td, Mode::LongPath { weights }) {
        Some((cert, w)) if w >= k => Some(cert),
        _ => None,
    }
}

/// Maximum-weight path of `h` and its weight.
pub fn max_weight_path(h: &Graph, weights: &[u64], td: &TreeDecomposition) -> Option<(Certificate, u64)> {
    pathdp::solve(h, td, Mode::LongPath { weights })
}

/// `min(budget, ceil(2^(c_rep * k^(1-1/d) * log2(k)^2)))`.
pub fn repetition_count(k: usize, cfg: &SolverConfig) -> u64 {
    if k < 2 {
        return 1.min(cfg.repetition_budget).max(1);
    }
    let l = cover::log2(k as f64);
    let e = cfg.c_rep * libm::pow(k as f64, 1.0 - 1.0 / cfg.dimension as f64) * l * l;
    if e >= 63.0 {
        return cfg.repetition_budget;
    }
    (libm::ceil(libm::pow(2.0, e)) as u64).min(cfg.repetition_budget).max(1)
}

/// Components of the contracted graph with heuristic width at most this are
/// kept whole; `capped` also applies `max_path_width`.
pub fn cover_width_bound(k: usize, cfg: &SolverConfig, capped: bool) -> f64 {
    let b = cfg.keep_width * CoverParams::width_scale(k, cfg.dimension);
    if capped {
        b.min(cfg.max_path_width as f64)
    } else {
        b
    }
}

/// The vertex set of one repetition: outer cover of `h_twin`, then a pattern
/// cover of every component whose heuristic width exceeds [`cover_width_bound`].
pub fn sample_vertex_set(
    w: &WeightedCompressed,
    k: usize,
    seed: u64,
    cfg: &SolverConfig,
    capped: bool,
    trace: Option<&mut Vec<CoverSample>>,
) -> VertexSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = w.h_twin.n();
    let outer = outer_cover_with(&w.h_twin, k, rng.gen(), cfg.outer_c);
    let (sub, map) = w.h_twin.induced(&outer.to_vec());
    let bound = cover_width_bound(k, cfg, capped);
    let params = CoverParams::new(k, cfg.dimension, cfg.c_r);
    let mut a = VertexSet::new(n);
    let mut trace = trace;
    for comp in sub.components() {
        let s: u64 = rng.gen();
        let (cg, cmap) = sub.induced(&comp);
        if heuristic_decomposition(&cg).width() as f64 <= bound {
            for &i in &comp {
                a.insert(map[i]);
            }
            continue;
        }
        let sample = pattern_cover(&cg, k, s, &params);
        for i in sample.a.iter() {
            a.insert(map[cmap[i]]);
        }
        if let Some(t) = trace.as_deref_mut() {
            t.push(sample);
        }
    }
    a
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongPathReport {
    pub certificate: Option<Certificate>,
    pub repetitions: u64,
    /// Vertices of the contracted graph in the last partition round.
    pub h_size: usize,
    /// Largest decomposition width used by the dynamic program.
    pub width: usize,
    pub fallbacks: usize,
    /// Samples discarded because a table exceeded `max_dp_states`.
    pub overflows: u64,
    /// The NO answer is exact: some repetition sampled the whole contracted graph.
    pub exhaustive: bool,
    /// Pattern-cover samples, when requested.
    pub samples: Vec<CoverSample>,
}

pub fn solve_long_path(g: &Graph, k: usize, cfg: &SolverConfig, seed: u64) -> Result<Option<Certificate>> {
    solve_long_path_report(g, k, cfg, seed, false).map(|r| r.certificate)
}

pub fn solve_long_path_report(
    g: &Graph,
    k: usize,
    cfg: &SolverConfig,
    seed: u64,
    collect_samples: bool,
) -> Result<LongPathReport> {
    cfg.validate()?;
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    let mut report = LongPathReport {
        certificate: None,
        repetitions: 0,
        h_size: g.n(),
        width: 0,
        fallbacks: 0,
        overflows: 0,
        exhaustive: true,
        samples: Vec::new(),
    };
    if k > g.n() {
        return Ok(report);
    }
    if k <= 3 {
        report.certificate = short_path(g, k);
        return Ok(report);
    }
    let (p0, _) = kappa_partition_default(g)?;
    let (mut p, _) = refine_to_linked(g, &p0, cfg)?;
    let total = repetition_count(k, cfg);
    let mut rep = 0u64;
    'rounds: loop {
        let gx = red_closure(g, &p);
        let marking = mark(&gx, &p, cfg.mark_strategy, cfg.mark_exponent);
        let w = build_weighted(&gx, &p, &marking);
        report.h_size = w.h.n();
        let mut tried: HashSet<VertexSet> = HashSet::new();
        while rep < total {
            let rep_seed = seed.wrapping_add(rep);
            rep += 1;
            report.repetitions = rep;
            // a sample whose table overflows is redrawn once with wide components covered
            let mut outcome = None;
            for capped in [false, true] {
                let trace = if collect_samples { Some(&mut report.samples) } else { None };
                let a = sample_vertex_set(&w, k, rep_seed, cfg, capped, trace);
                if a.is_empty() || !tried.insert(a.clone()) {
                    break;
                }
                let verts = a.to_vec();
                let (sub, map) = w.h_prime.induced(&verts);
                let weights: Vec<u64> = map.iter().map(|&v| w.weights[v]).collect();
                let td = heuristic_decomposition(&sub);
                report.width = report.width.max(td.width());
                match pathdp::solve_capped(&sub, &td, Mode::LongPath { weights: &weights }, cfg.max_dp_states) {
                    Ok(found) => {
                        let found = found.filter(|(_, value)| *value >= k as u64).map(|(c, _)| c);
                        outcome = Some((found, verts.len(), map));
                        break;
                    }
                    Err(_) => report.overflows += 1,
                }
            }
            let Some((found, size, map)) = outcome else { continue };
            let Some(cert) = found else {
                if size == w.h.n() {
                    return Ok(report);
                }
                continue;
            };
            let h_path: Vec<usize> = cert.vertices.iter().map(|&i| map[i]).collect();
            match splice(g, &p, w.expand(&h_path), false, false) {
                Ok(seq) => {
                    let out = Certificate::path(seq);
                    if out.validate(g).is_err() || out.len() < k {
                        return Err(Error::ContractViolation(alloc::format!(
                            "reconstructed path of length {} failed validation",
                            out.len()
                        )));
                    }
                    report.certificate = Some(out);
                    return Ok(report);
                }
                Err(i) if p.part(i).len() > 1 => {
                    p = p.uncompress(i);
                    report.fallbacks += 1;
                    continue 'rounds;
                }
                Err(i) => {
                    return Err(Error::ContractViolation(alloc::format!("part {i} cannot be uncompressed")));
                }
            }
        }
        report.exhaustive = false;
        return Ok(report);
    }
}

/// Paths on one, two or three vertices by direct search.
fn short_path(g: &Graph, k: usize) -> Option<Certificate> {
    match k {
        1 => (g.n() > 0).then(|| Certificate::path(alloc::vec![0])),
        2 => g.edges().next().map(|(u, v)| Certificate::path(alloc::vec![u, v])),
        _ => (0..g.n())
            .find(|&v| g.degree(v) >= 2)
            .map(|v| Certificate::path(alloc::vec![g.neighbors(v)[0], v, g.neighbors(v)[1]])),
    }
}
