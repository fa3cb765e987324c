//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero when any criterion fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use linkpart_core::geometry::{empirical_growth, fit_power_law, generate_instance, intersection_graph};
use linkpart_core::graph::families::{grid, path};
use linkpart_core::graph::vertex_connectivity;
use linkpart_core::hamilton::{solve_hamiltonian_cycle, solve_hamiltonian_path};
use linkpart_core::longpath::{outer_cover, outer_radius_cap, pattern_cover, solve_long_path, CoverParams};
use linkpart_core::oracle::{held_karp_cycle, held_karp_path, longest_path_exact, planted_clique_partition};
use linkpart_core::partition::{
    clique_partition_exact, kappa_partition_default, refine_to_linked_traced, separator_tree, CALIBRATED_C_TW,
};
use linkpart_core::treewidth::heuristic_decomposition;
use linkpart_core::{Graph, PartKind, SolverConfig, VertexSet};
use sha2::{Digest, Sha256};
use statrs::distribution::{Beta, ContinuousCDF};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// Largest connected component, relabelled.
fn largest_component(g: &Graph) -> Graph {
    let comps = g.components();
    let best = comps.iter().max_by_key(|c| c.len()).cloned().unwrap_or_default();
    g.induced(&best).0
}

/// Unit-disk style instance with a target expected degree.
fn geometric(n: usize, beta: f64, degree: f64, seed: u64) -> Graph {
    let reach = 1.0 + beta;
    let side = (n as f64 * std::f64::consts::PI * reach * reach / degree).sqrt();
    let mix = if beta >= 2.0 { 0.5 } else { 1.0 };
    intersection_graph(&generate_instance(2, beta, n, side, mix, seed).unwrap()).unwrap()
}

fn ham_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let cfg = SolverConfig::default();
    let (mut instances, mut mismatches, mut invalid, mut yes) = (0, 0, 0, 0);
    for seed in 0..520u64 {
        let beta = if seed % 2 == 0 { 1.0 } else { 2.0 };
        let n = 6 + (seed as usize / 2) % 11;
        let degree = [2.5, 4.0, 6.0, 9.0][(seed as usize / 22) % 4];
        let g = geometric(n, beta, degree, 1_000 + seed);
        instances += 1;
        let checks = [
            (solve_hamiltonian_cycle(&g, &cfg).unwrap(), held_karp_cycle(&g).unwrap()),
            (solve_hamiltonian_path(&g, &cfg).unwrap(), held_karp_path(&g).unwrap()),
        ];
        for (got, want) in checks {
            mismatches += (got.is_some() != want.is_some()) as usize;
            if let Some(c) = got {
                yes += 1;
                invalid += c.validate_hamiltonian(&g).is_err() as usize;
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        instances >= 500 && mismatches == 0 && invalid == 0 && elapsed < Duration::from_secs(600),
        format!("{instances} instances, {yes} yes certificates, {mismatches} mismatches, {invalid} invalid, {elapsed:.1?}"),
    )
}

fn longpath_oracle_equivalence() -> Outcome {
    let cfg = SolverConfig::default();
    let (mut instances, mut oracle_yes, mut found, mut unsound) = (0, 0, 0, 0);
    for seed in 0..300u64 {
        let n = 6 + seed as usize % 9;
        let degree = [2.0, 3.0, 4.5][(seed as usize / 9) % 3];
        let g = largest_component(&geometric(n, 1.0 + (seed % 2) as f64, degree, 5_000 + seed));
        let (best, _) = longest_path_exact(&g, None).unwrap();
        instances += 1;
        for k in 1..=g.n() {
            let got = solve_long_path(&g, k, &cfg, seed * 31 + k as u64).unwrap();
            let truth = k as u64 <= best;
            oracle_yes += truth as usize;
            match got {
                Some(c) => {
                    let ok = c.validate(&g).is_ok() && c.len() >= k && truth;
                    unsound += !ok as usize;
                    found += truth as usize;
                }
                None => {}
            }
        }
    }
    let rate = found as f64 / oracle_yes as f64;
    outcome(
        instances >= 300 && unsound == 0 && rate >= 0.99,
        format!(
            "{instances} instances, soundness violations {unsound}, completeness {found}/{oracle_yes} = {:.4}; a NO is one-sided unless the sampled set was all of H",
            rate
        ),
    )
}

fn partition_structure() -> Outcome {
    let (mut checked, mut failures, mut bounded_parts) = (0, Vec::new(), 0);
    for seed in 0..200u64 {
        // geometric instances: every part of the refinement passes its kind invariant
        let g = geometric(40 + seed as usize % 40, 1.0 + (seed % 3) as f64 * 0.5, 8.0, 20_000 + seed);
        let cfg = SolverConfig::default();
        let (p0, _) = kappa_partition_default(&g).unwrap();
        let (p, _, records) = refine_to_linked_traced(&g, &p0, &cfg).unwrap();
        if p.validate(&g).is_err() {
            failures.push(format!("geometric {seed}: invalid partition"));
        }
        for (i, k) in p.kinds().iter().enumerate() {
            if let PartKind::Linked(c) = k {
                let (sub, _) = g.induced(p.part(i));
                if *c != cfg.g_threshold + 1 || vertex_connectivity(&sub) < *c {
                    failures.push(format!("geometric {seed}: part {i} below threshold"));
                }
            }
        }
        for r in &records {
            let part = p0.part(r.source_part);
            let x = VertexSet::from_iter(g.n(), part.iter().copied());
            if part.len() <= 24 && clique_partition_exact(&g, &x, cfg.kappa).unwrap().is_some() {
                bounded_parts += 1;
                if r.leaf_count > cfg.kappa || r.interior_size > (cfg.kappa - 1) * cfg.g_threshold {
                    failures.push(format!("geometric {seed}: part {} exceeds the tree bounds", r.source_part));
                }
            }
        }
        // planted three-clique instances: the separator tree bounds must hold
        let sizes = [5 + seed as usize % 6, 5 + (seed as usize / 6) % 6, 5 + (seed as usize / 36) % 6];
        let n: usize = sizes.iter().sum();
        let (h, _) = planted_clique_partition(&sizes, n + seed as usize % n, 30_000 + seed);
        let h = largest_component(&h);
        let thr = 4;
        let t = separator_tree(&h, &VertexSet::full(h.n()), thr);
        if t.leaf_count() > 3 || t.interior_union().len() > 2 * thr {
            failures.push(format!("planted {seed}: {} leaves, |X'| = {}", t.leaf_count(), t.interior_union().len()));
        }
        for leaf in t.leaves() {
            let (sub, _) = h.induced(leaf);
            if !sub.is_complete() && vertex_connectivity(&sub) <= thr {
                failures.push(format!("planted {seed}: leaf below threshold"));
            }
        }
        checked += 2;
    }
    outcome(
        failures.is_empty(),
        format!(
            "{checked} partitions and trees, {bounded_parts} parts with a 3-clique cover checked for tree bounds, failures {:?}",
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn treewidth_scaling() -> Outcome {
    let start = Instant::now();
    let density = 1.0;
    let mut medians = Vec::new();
    for n in [100usize, 400, 1600] {
        let side = (n as f64 / density).sqrt();
        let mut widths: Vec<usize> = (0..20u64)
            .map(|s| {
                let g = intersection_graph(&generate_instance(2, 1.0, n, side, 1.0, 40_000 + s).unwrap()).unwrap();
                heuristic_decomposition(&g).width()
            })
            .collect();
        widths.sort_unstable();
        medians.push((widths[9] + widths[10]) as f64 / 2.0);
    }
    let r1 = medians[1] / medians[0];
    let r2 = medians[2] / medians[1];
    let elapsed = start.elapsed();
    outcome(
        r1 <= 2.5 && r2 <= 2.5 && elapsed < Duration::from_secs(300),
        format!("median widths {medians:?}, ratios {r1:.3} and {r2:.3}, {elapsed:.1?}"),
    )
}

fn pattern_cover_invariants() -> Outcome {
    let n = 400;
    let side = (n as f64).sqrt();
    let per_k = 125u64;
    let (mut draws, mut aborted, mut violations, mut worst) = (0, 0, Vec::new(), 0.0f64);
    for (ki, &k) in [4usize, 8, 16, 32].iter().enumerate() {
        let params = CoverParams::new(k, 2, 2.0);
        let scale = CoverParams::width_scale(k, 2);
        for rep in 0..per_k {
            let g = intersection_graph(&generate_instance(2, 1.0, n, side, 1.0, 10_000 + rep).unwrap()).unwrap();
            let s = pattern_cover(&g, k, 15_000 + ki as u64 * per_k + rep, &params);
            draws += 1;
            if s.aborted {
                aborted += 1;
                continue;
            }
            let (sub, _) = g.induced(&s.a.to_vec());
            let ratio = heuristic_decomposition(&sub).width() as f64 / scale;
            worst = worst.max(ratio);
            if s.pool.len() > params.l_cap {
                violations.push(format!("k={k} draw {rep}: |B| = {}", s.pool.len()));
            }
            if s.clusters.iter().any(|c| c.radius > params.r_cap) {
                violations.push(format!("k={k} draw {rep}: radius above cap"));
            }
            if ratio > CALIBRATED_C_TW {
                violations.push(format!("k={k} draw {rep}: width ratio {ratio:.3}"));
            }
        }
    }
    outcome(
        violations.is_empty(),
        format!(
            "{draws} draws ({aborted} aborted), c_tw = {CALIBRATED_C_TW}, worst width ratio {worst:.3}, {} violations {:?}",
            violations.len(),
            violations.iter().take(4).collect::<Vec<_>>()
        ),
    )
}

fn clopper_pearson_lower(successes: u64, trials: u64) -> f64 {
    if successes == 0 {
        return 0.0;
    }
    Beta::new(successes as f64, (trials - successes + 1) as f64).unwrap().inverse_cdf(0.025)
}

fn outer_cover_probability() -> Outcome {
    let k = 8;
    let trials = 2000u64;
    let cap = outer_radius_cap(k, 4.0);
    let udg = largest_component(&intersection_graph(&generate_instance(2, 1.0, 400, 20.0, 1.0, 50_000).unwrap()).unwrap());
    let udg_x = {
        let mid = udg.n() / 2;
        let dist = udg.bfs_distances(mid);
        let mut order: Vec<usize> = (0..udg.n()).collect();
        order.sort_by_key(|&v| (dist[v], v));
        order.truncate(k);
        order
    };
    let grid_x: Vec<usize> = (0..2).flat_map(|r| (0..4).map(move |c| (9 + r) * 20 + 8 + c)).collect();
    let families: [(&str, Graph, Vec<usize>); 3] =
        [("path", path(400), (200..208).collect()), ("grid", grid(20, 20), grid_x), ("unit-disk", udg, udg_x)];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, g, x) in families {
        let (mut hits, mut radius_ok) = (0u64, 0u64);
        for t in 0..trials {
            let a = outer_cover(&g, k, 60_000 + t);
            hits += x.iter().all(|&v| a.contains(v)) as u64;
            let (sub, _) = g.induced(&a.to_vec());
            let ok = sub.components().iter().all(|c| {
                let d = sub.bfs_distances(c[0]);
                c.iter().all(|&v| d[v] <= cap)
            });
            radius_ok += ok as u64;
        }
        let rate = hits as f64 / trials as f64;
        pass &= rate >= 0.05 && radius_ok == trials;
        parts.push(format!(
            "{name}: {hits}/{trials} = {rate:.3} (95% lower bound {:.3}), radius ok {radius_ok}/{trials}",
            clopper_pearson_lower(hits, trials)
        ));
    }
    outcome(pass, parts.join("; "))
}

fn growth_exponent() -> Outcome {
    let density = 0.3;
    let n = 1500;
    let side = (n as f64 / density).sqrt();
    let (mut lo, mut hi, mut max_degree) = (f64::MAX, f64::MIN, 0);
    for s in 0..20u64 {
        let g = intersection_graph(&generate_instance(2, 1.0, n, side, 1.0, 70_000 + s).unwrap()).unwrap();
        max_degree = max_degree.max(g.max_degree());
        let (_, e) = fit_power_law(&empirical_growth(&g, 8));
        lo = lo.min(e);
        hi = hi.max(e);
    }
    outcome(
        lo >= 1.6 && hi <= 2.4,
        format!("fitted exponents in [{lo:.3}, {hi:.3}] over 20 seeds, max degree {max_degree}"),
    )
}

/// Runs the command sequence in `dir` and hashes, per step, the exit status,
/// stdout and every file named on the command line.
fn command_digests(dir: &Path) -> Vec<(String, String)> {
    let bin = env!("CARGO_BIN_EXE_linkpart");
    let steps: Vec<Vec<&str>> = vec![
        vec!["generate", "--n", "14", "--side", "5", "--seed", "7", "-o", "a.json"],
        vec!["generate", "--d", "3", "--beta", "2", "--n", "60", "--side", "9", "--mix", "0.5", "--seed", "8", "-o", "b.json"],
        vec!["generate", "--n", "300", "--side", "17", "--seed", "9", "-o", "c.json"],
        vec!["graph", "a.json", "-o", "a.txt"],
        vec!["graph", "b.json", "-o", "b.txt"],
        vec!["graph", "c.json", "-o", "c.txt"],
        vec!["partition", "b.txt", "-o", "b.part.json", "--td", "b.td"],
        vec!["partition", "c.txt", "--g-threshold", "3", "-o", "c.part.json", "--td", "c.td"],
        vec!["ham", "a.txt"],
        vec!["ham", "a.txt", "--path", "--blue-strategy", "bounded"],
        vec!["longpath", "a.txt", "--k", "9", "--seed", "3", "--trace", "a.trace"],
        vec!["longpath", "c.txt", "--k", "20", "--seed", "4", "--budget", "50", "--trace", "c.trace"],
        vec!["cover", "c.txt", "--k", "16", "--seed", "5", "--trials", "30", "--trace", "cover.trace"],
        vec!["cover", "c.txt", "--k", "8", "--outer", "--trials", "30"],
        vec!["bench", "--cmd", "ham-cycle", "--n", "12", "--side", "5", "--count", "60", "--omit-timing", "--csv", "hc.csv", "--certs", "hc.certs"],
        vec!["bench", "--cmd", "ham-path", "--n", "14", "--side", "6", "--beta", "2", "--mix", "0.5", "--count", "60", "--omit-timing", "--csv", "hp.csv", "--certs", "hp.certs"],
        vec!["bench", "--cmd", "longpath", "--n", "14", "--side", "6", "--k", "9", "--count", "60", "--omit-timing", "--csv", "lp.csv", "--certs", "lp.certs"],
    ];
    let mut digests = Vec::new();
    for step in steps {
        let out = Command::new(bin).args(&step).current_dir(dir).output().expect("binary runs");
        let mut h = Sha256::new();
        h.update(out.status.code().unwrap_or(-1).to_le_bytes());
        h.update(&out.stdout);
        for p in step.iter().map(|arg| dir.join(arg)).filter(|p| p.is_file()) {
            h.update(std::fs::read(&p).unwrap());
        }
        let hex: String = h.finalize().iter().map(|b| format!("{b:02x}")).collect();
        digests.push((step.join(" "), hex));
    }
    digests
}

fn determinism() -> Outcome {
    let first = tempfile::TempDir::new().unwrap();
    let second = tempfile::TempDir::new().unwrap();
    let a = command_digests(first.path());
    let b = command_digests(second.path());
    let differing: Vec<&String> = a.iter().zip(&b).filter(|(x, y)| x.1 != y.1).map(|(x, _)| &x.0).collect();
    outcome(differing.is_empty(), format!("{} commands hashed twice, differing: {differing:?}", a.len()))
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("1 hamiltonicity matches Held-Karp", ham_oracle_equivalence),
        ("2 long path sound and complete", longpath_oracle_equivalence),
        ("3 linked partition structure", partition_structure),
        ("4 treewidth scaling", treewidth_scaling),
        ("5 pattern-cover invariants", pattern_cover_invariants),
        ("6 outer-cover capture probability", outer_cover_probability),
        ("7 growth exponent", growth_exponent),
        ("8 determinism", determinism),
    ];
    let results: Vec<(Outcome, Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|(_, f)| {
                s.spawn(move || {
                    let t = Instant::now();
                    (f(), t.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    });
    let mut failed = 0;
    for ((name, _), (o, t)) in criteria.iter().zip(&results) {
        println!("criterion {name}: {} ({}) [{t:.1?}]", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += !o.pass as usize;
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
