//! Calibrates the pattern-cover width constant: prints the 99th percentile of
//! `width(G[A]) / (k^(1-1/d) log2 k)` over non-aborted draws. The corpus is unit
//! disks at density 1 (about 12.6 expected neighbors), `n = 400`,
//! `k` in {4, 8, 16, 32}; its seeds are disjoint from the acceptance corpus.
//!
//! `cargo run --release -p linkpart-core --example calibrate_ctw [instance_seed_base draw_seed_base draws_per_k]`

use linkpart_core::geometry::{generate_instance, intersection_graph};
use linkpart_core::longpath::{pattern_cover, CoverParams};
use linkpart_core::treewidth::heuristic_decomposition;

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (inst_base, draw_base, per_k) = match args.as_slice() {
        [a, b, c] => (*a, *b, *c),
        _ => (900_000, 700_000, 125),
    };
    let n = 400;
    let side = (n as f64).sqrt();
    let mut ratios = Vec::new();
    for (ki, &k) in [4usize, 8, 16, 32].iter().enumerate() {
        let params = CoverParams::new(k, 2, 2.0);
        for rep in 0..per_k {
            let inst = generate_instance(2, 1.0, n, side, 1.0, inst_base + rep).unwrap();
            let g = intersection_graph(&inst).unwrap();
            let s = pattern_cover(&g, k, draw_base + ki as u64 * per_k + rep, &params);
            if s.aborted {
                continue;
            }
            let (sub, _) = g.induced(&s.a.to_vec());
            let w = heuristic_decomposition(&sub).width();
            ratios.push(w as f64 / CoverParams::width_scale(k, 2));
        }
    }
    ratios.sort_by(f64::total_cmp);
    let p99 = ratios[((ratios.len() as f64) * 0.99).ceil() as usize - 1];
    let over = |t: f64| ratios.iter().filter(|&&r| r > t).count();
    println!("draws {} p99 {:.4} max {:.4}", ratios.len(), p99, ratios[ratios.len() - 1]);
    println!("c_tw {:.2} exceeded by {}", (p99 * 100.0).ceil() / 100.0, over((p99 * 100.0).ceil() / 100.0));
}
