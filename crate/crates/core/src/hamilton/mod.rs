//! Hamiltonian cycle and path through partition compression: parts become
//! cliques via red edges, cross edges are filtered to blue edges, vertices
//! without blue edges collapse onto one special vertex per part, and an exact
//! dynamic program decides the compressed graph.

mod compress;

use alloc::vec::Vec;
use core::fmt;

pub use compress::{blue_cap, compress, red_closure, select_blue_edges, AugmentedGraph, BlueSelection, CompressedGraph};

use crate::certificate::{Certificate, CertificateError, CertificateKind};
use crate::error::Result;
use crate::graph::Graph;
use crate::partition::{kappa_partition_default, refine_to_linked, PartKind, Partition, SolverConfig};
use crate::pathdp::{self, Mode};
use crate::splice::splice;
use crate::treewidth::{heuristic_decomposition, TreeDecomposition};

/// Hamiltonian cycle of `h`, exact.
pub fn hamiltonian_cycle_dp(h: &Graph, td: &TreeDecomposition) -> Option<Certificate> {
    pathdp::solve(h, td, Mode::Cycle).map(|(c, _)| c)
}

/// Hamiltonian path of `h`, exact.
pub fn hamiltonian_path_dp(h: &Graph, td: &TreeDecomposition) -> Option<Certificate> {
    pathdp::solve(h, td, Mode::HamPath).map(|(c, _)| c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReconstructError {
    /// The named part admits no suitable linkage; solve again with it uncompressed.
    FallbackRequired(usize),
    Invalid(CertificateError),
}

impl fmt::Display for ReconstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReconstructError::FallbackRequired(i) => write!(f, "part {i} must be uncompressed"),
            ReconstructError::Invalid(e) => write!(f, "reconstructed certificate is invalid: {e}"),
        }
    }
}

/// Lifts a Hamiltonian certificate of the compressed graph to `g`.
pub fn reconstruct(
    g: &Graph,
    p: &Partition,
    comp: &CompressedGraph,
    cert_h: &Certificate,
) -> core::result::Result<Certificate, ReconstructError> {
    let seq: Vec<usize> = cert_h.vertices.iter().map(|&v| comp.origin[v]).collect();
    let cyclic = cert_h.kind == CertificateKind::Cycle;
    let out = splice(g, p, seq, cyclic, true).map_err(ReconstructError::FallbackRequired)?;
    let cert = Certificate { kind: cert_h.kind, vertices: out };
    cert.validate_hamiltonian(g).map_err(ReconstructError::Invalid)?;
    Ok(cert)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamReport {
    pub certificate: Option<Certificate>,
    /// Vertices of the last compressed graph.
    pub h_size: usize,
    /// Width of the last decomposition.
    pub width: usize,
    pub parts: usize,
    pub fallbacks: usize,
}

pub fn solve_hamiltonian_cycle(g: &Graph, cfg: &SolverConfig) -> Result<Option<Certificate>> {
    solve_report(g, cfg, CertificateKind::Cycle).map(|r| r.certificate)
}

pub fn solve_hamiltonian_path(g: &Graph, cfg: &SolverConfig) -> Result<Option<Certificate>> {
    solve_report(g, cfg, CertificateKind::Path).map(|r| r.certificate)
}

pub fn solve_hamiltonian_cycle_report(g: &Graph, cfg: &SolverConfig) -> Result<HamReport> {
    solve_report(g, cfg, CertificateKind::Cycle)
}

pub fn solve_hamiltonian_path_report(g: &Graph, cfg: &SolverConfig) -> Result<HamReport> {
    solve_report(g, cfg, CertificateKind::Path)
}

fn solve_report(g: &Graph, cfg: &SolverConfig, kind: CertificateKind) -> Result<HamReport> {
    cfg.validate()?;
    let mut report = HamReport { certificate: None, h_size: 0, width: 0, parts: 0, fallbacks: 0 };
    let n = g.n();
    let cycle = kind == CertificateKind::Cycle;
    if n == 0 || !g.is_connected() || (cycle && n < 3) {
        return Ok(report);
    }
    let (p0, _) = kappa_partition_default(g)?;
    let (mut p, _) = refine_to_linked(g, &p0, cfg)?;
    loop {
        report.parts = p.len();
        if p.len() == 1 && p.kind(0) == PartKind::Clique {
            let vertices: Vec<usize> = (0..n).collect();
            report.h_size = n;
            report.width = n - 1;
            report.certificate = Some(Certificate { kind, vertices });
            return Ok(report);
        }
        let gx = red_closure(g, &p);
        let blue = select_blue_edges(&gx, &p, cfg.blue_strategy);
        let comp = compress(&gx, &p, &blue);
        report.h_size = comp.h.n();
        if cycle && comp.h.n() < 3 {
            let i = (0..p.len()).find(|&i| p.part(i).len() > 1).expect("a part with several vertices");
            p = p.uncompress(i);
            report.fallbacks += 1;
            continue;
        }
        let td = heuristic_decomposition(&comp.h);
        report.width = td.width();
        let mode = if cycle { Mode::Cycle } else { Mode::HamPath };
        let found = pathdp::solve_capped(&comp.h, &td, mode, cfg.max_dp_states)
            .map_err(|got| crate::Error::guard("dynamic program table", cfg.max_dp_states, got))?;
        let Some((cert_h, _)) = found else { return Ok(report) };
        match reconstruct(g, &p, &comp, &cert_h) {
            Ok(cert) => {
                report.certificate = Some(cert);
                return Ok(report);
            }
            Err(ReconstructError::FallbackRequired(i)) if p.part(i).len() > 1 => {
                p = p.uncompress(i);
                report.fallbacks += 1;
            }
            Err(e) => {
                return Err(crate::Error::ContractViolation(alloc::format!("{e}")));
            }
        }
    }
}
