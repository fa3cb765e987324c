use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use linkpart_core::geometry::{generate_instance, intersection_graph};
use linkpart_core::hamilton::{solve_hamiltonian_cycle_report, solve_hamiltonian_path_report};
use linkpart_core::longpath::{
    outer_cover, outer_radius_cap, pattern_cover, solve_long_path_report, CoverParams, CoverSample,
};
use linkpart_core::partition::{kappa_partition_default, refine_to_linked, CALIBRATED_C_TW};
use linkpart_core::treewidth::{heuristic_decomposition, lift};
use linkpart_core::{Graph, PartKind, VertexSet};

use crate::bench;
use crate::cli::{Cli, Command, CoverArgs, GenerateArgs, GraphArgs, HamArgs, LongpathArgs, PartitionArgs};
use crate::error::CliError;
use crate::format::{parse_graph, parse_instance, write_decomposition, write_graph, write_instance, write_partition, TraceRecord};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Generate(a) => generate(a, out),
        Command::Graph(a) => graph(a, out),
        Command::Partition(a) => partition(a, out),
        Command::Ham(a) => ham(a, out),
        Command::Longpath(a) => longpath(a, out),
        Command::Cover(a) => cover(a, out),
        Command::Bench(a) => bench::run(a, out),
    }
}

pub(crate) fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub(crate) fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn emit(out: &mut dyn Write, path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, text),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

pub fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read_file(path)?).map_err(|source| CliError::Format { path: path.to_path_buf(), source })
}

fn generate(a: GenerateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let s = &a.shape;
    let inst = generate_instance(s.d, s.beta, s.n, s.side, s.mix, s.seed)?;
    emit(out, a.output.as_ref(), &write_instance(&inst))?;
    Ok(EXIT_YES)
}

fn graph(a: GraphArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let inst = parse_instance(&read_file(&a.instance)?)
        .map_err(|source| CliError::Format { path: a.instance.clone(), source })?;
    emit(out, a.output.as_ref(), &write_graph(&intersection_graph(&inst)?))?;
    Ok(EXIT_YES)
}

fn partition(a: PartitionArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(&a.graph)?;
    let cfg = a.solver.config(2, 0);
    cfg.validate()?;
    let (p0, q0) = kappa_partition_default(&g)?;
    let (p, q) = refine_to_linked(&g, &p0, &cfg)?;
    let td = lift(&heuristic_decomposition(&q.graph), &p);
    if let Some(path) = &a.output {
        write_file(path, &write_partition(&p))?;
    }
    if let Some(path) = &a.td {
        write_file(path, &write_decomposition(&td, g.n()))?;
    }
    let cliques = p.kinds().iter().filter(|k| **k == PartKind::Clique).count();
    let mut s = String::new();
    let _ = writeln!(s, "kappa_parts {}", p0.len());
    let _ = writeln!(s, "kappa_quotient_degree {}", q0.degree());
    let _ = writeln!(s, "parts {}", p.len());
    let _ = writeln!(s, "clique_parts {cliques}");
    let _ = writeln!(s, "linked_parts {}", p.len() - cliques);
    let _ = writeln!(s, "max_part {}", p.max_part_size());
    let _ = writeln!(s, "quotient_degree {}", q.degree());
    let _ = writeln!(s, "width {}", td.width());
    if a.output.is_none() {
        s.push_str(&write_partition(&p));
    }
    out.write_all(s.as_bytes())?;
    Ok(EXIT_YES)
}

fn ham(a: HamArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(&a.graph)?;
    let cfg = a.solver.config(2, 0);
    let report =
        if a.path { solve_hamiltonian_path_report(&g, &cfg)? } else { solve_hamiltonian_cycle_report(&g, &cfg)? };
    match report.certificate {
        Some(c) => {
            writeln!(out, "yes\n{}", c.to_line())?;
            Ok(EXIT_YES)
        }
        None => {
            writeln!(out, "no")?;
            Ok(EXIT_NO)
        }
    }
}

fn write_trace(path: &Path, samples: &[CoverSample]) -> Result<(), CliError> {
    let mut text = String::new();
    for (draw, s) in samples.iter().enumerate() {
        for r in TraceRecord::from_sample(draw, s) {
            text.push_str(&r.to_json_line());
        }
    }
    write_file(path, &text)
}

fn longpath(a: LongpathArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(&a.graph)?;
    let cfg = a.solver.config(a.d, a.seed);
    let report = solve_long_path_report(&g, a.k, &cfg, a.seed, a.trace.is_some())?;
    if let Some(path) = &a.trace {
        write_trace(path, &report.samples)?;
    }
    let code = match &report.certificate {
        Some(c) => {
            writeln!(out, "yes\n{}", c.to_line())?;
            EXIT_YES
        }
        None => {
            writeln!(out, "{}", if report.exhaustive { "no" } else { "unknown" })?;
            EXIT_NO
        }
    };
    writeln!(out, "repetitions {}", report.repetitions)?;
    writeln!(out, "discarded {}", report.overflows)?;
    Ok(code)
}

/// BFS eccentricity of the smallest vertex of each component of `g[a]`.
fn component_radii(g: &Graph, a: &VertexSet) -> Vec<usize> {
    let (sub, _) = g.induced(&a.to_vec());
    sub.components()
        .iter()
        .map(|c| {
            let dist = sub.bfs_distances(c[0]);
            c.iter().map(|&v| dist[v]).max().unwrap_or(0)
        })
        .collect()
}

fn cover(a: CoverArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(&a.graph)?;
    if a.k < 2 || a.d == 0 || !(a.cr > 0.0) {
        return Err(CliError::Usage("cover needs k >= 2, d >= 1 and cr > 0".into()));
    }
    let mut s = String::new();
    let mut total = 0usize;
    if a.outer {
        let cap = outer_radius_cap(a.k, 4.0);
        let mut max_radius = 0;
        for t in 0..a.trials {
            let cover = outer_cover(&g, a.k, a.seed.wrapping_add(t));
            total += cover.len();
            max_radius = component_radii(&g, &cover).into_iter().fold(max_radius, usize::max);
        }
        let _ = writeln!(s, "draws {}", a.trials);
        let _ = writeln!(s, "mean_size {:.3}", total as f64 / a.trials.max(1) as f64);
        let _ = writeln!(s, "radius_cap {cap}");
        let _ = writeln!(s, "max_component_radius {max_radius}");
    } else {
        let params = CoverParams::new(a.k, a.d, a.cr);
        let scale = CoverParams::width_scale(a.k, a.d);
        let (mut aborted, mut max_width, mut over) = (0, 0, 0);
        let mut samples = Vec::new();
        for t in 0..a.trials {
            let sample = pattern_cover(&g, a.k, a.seed.wrapping_add(t), &params);
            if sample.aborted {
                aborted += 1;
            } else {
                total += sample.a.len();
                let (sub, _) = g.induced(&sample.a.to_vec());
                let w = heuristic_decomposition(&sub).width();
                max_width = max_width.max(w);
                over += (w as f64 > CALIBRATED_C_TW * scale) as usize;
            }
            if a.trace.is_some() {
                samples.push(sample);
            }
        }
        if let Some(path) = &a.trace {
            write_trace(path, &samples)?;
        }
        let kept = a.trials as usize - aborted;
        let _ = writeln!(s, "draws {}", a.trials);
        let _ = writeln!(s, "aborted {aborted}");
        let _ = writeln!(s, "mean_size {:.3}", total as f64 / kept.max(1) as f64);
        let _ = writeln!(s, "radius_cap {}", params.r_cap);
        let _ = writeln!(s, "boundary_cap {}", params.l_cap);
        let _ = writeln!(s, "max_width {max_width}");
        let _ = writeln!(s, "width_bound {:.3}", CALIBRATED_C_TW * scale);
        let _ = writeln!(s, "over_bound {over}");
    }
    out.write_all(s.as_bytes())?;
    Ok(EXIT_YES)
}
