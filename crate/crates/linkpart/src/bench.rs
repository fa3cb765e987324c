use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

use linkpart_core::geometry::{generate_instance, intersection_graph};
use linkpart_core::hamilton::{solve_hamiltonian_cycle_report, solve_hamiltonian_path_report};
use linkpart_core::longpath::solve_long_path_report;
use linkpart_core::Certificate;
use rayon::prelude::*;
use serde::Serialize;

use crate::cli::{BenchArgs, BenchCmd};
use crate::commands::{write_file, EXIT_YES};
use crate::error::CliError;

/// One CSV row. `cert_len` is present iff `verdict == "yes"`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunRecord {
    pub id: u64,
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub beta: f64,
    pub cmd: &'static str,
    pub seed: u64,
    pub verdict: &'static str,
    pub cert_len: Option<usize>,
    pub ms: Option<u64>,
    pub h_size: usize,
    pub width: usize,
    pub reps: Option<u64>,
}

pub const CSV_HEADER: &str = "id,n,m,d,beta,cmd,seed,verdict,cert_len,ms,h_size,width,reps";

fn run_one(a: &BenchArgs, id: u64) -> Result<(RunRecord, Option<Certificate>), CliError> {
    let s = &a.shape;
    let seed = s.seed.wrapping_add(id);
    let g = intersection_graph(&generate_instance(s.d, s.beta, s.n, s.side, s.mix, seed)?)?;
    let cfg = a.solver.config(s.d, seed);
    let start = Instant::now();
    let (cert, verdict, h_size, width, reps) = match a.cmd {
        BenchCmd::HamCycle | BenchCmd::HamPath => {
            let r = if a.cmd == BenchCmd::HamCycle {
                solve_hamiltonian_cycle_report(&g, &cfg)?
            } else {
                solve_hamiltonian_path_report(&g, &cfg)?
            };
            let verdict = if r.certificate.is_some() { "yes" } else { "no" };
            (r.certificate, verdict, r.h_size, r.width, None)
        }
        BenchCmd::Longpath => {
            let k = a.k.unwrap_or(s.n / 2).max(1);
            let r = solve_long_path_report(&g, k, &cfg, seed, false)?;
            let verdict = match (&r.certificate, r.exhaustive) {
                (Some(_), _) => "yes",
                (None, true) => "no",
                (None, false) => "unknown",
            };
            (r.certificate, verdict, r.h_size, r.width, Some(r.repetitions))
        }
    };
    let ms = (!a.omit_timing).then(|| start.elapsed().as_millis() as u64);
    let record = RunRecord {
        id,
        n: g.n(),
        m: g.m(),
        d: s.d,
        beta: s.beta,
        cmd: a.cmd.name(),
        seed,
        verdict,
        cert_len: cert.as_ref().map(Certificate::len),
        ms,
        h_size,
        width,
        reps,
    };
    Ok((record, cert))
}

/// Rows come out in id order whatever the completion order.
pub fn run(a: BenchArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let rows = (0..a.count).into_par_iter().map(|id| run_one(&a, id)).collect::<Result<Vec<_>, _>>()?;
    let mut w = csv::Writer::from_writer(Vec::new());
    for (r, _) in &rows {
        w.serialize(r)?;
    }
    if rows.is_empty() {
        w.write_record(CSV_HEADER.split(','))?;
    }
    let csv_bytes = w.into_inner().map_err(|e| CliError::Output(e.into_error()))?;
    match &a.csv {
        Some(path) => write_file(path, std::str::from_utf8(&csv_bytes).expect("csv is utf-8"))?,
        None => out.write_all(&csv_bytes)?,
    }
    if let Some(path) = &a.certs {
        let mut text = String::new();
        for (r, c) in &rows {
            if let Some(c) = c {
                let _ = writeln!(text, "{} {}", r.id, c.to_line());
            }
        }
        write_file(path, &text)?;
    }
    Ok(EXIT_YES)
}
