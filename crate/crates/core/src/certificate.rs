//! Path and cycle certificates with an independent validity checker.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    Path,
    Cycle,
}

/// A vertex sequence claimed to be a path or a cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub vertices: Vec<usize>,
}

/// Why a certificate failed validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateError {
    Empty,
    OutOfRange(usize),
    Repeated(usize),
    NotAdjacent(usize, usize),
    TooShortForCycle,
    NotSpanning { covered: usize, n: usize },
}

impl fmt::Display for CertificateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => write!(f, "empty certificate"),
            Self::OutOfRange(v) => write!(f, "vertex {v} out of range"),
            Self::Repeated(v) => write!(f, "vertex {v} repeated"),
            Self::NotAdjacent(u, v) => write!(f, "{u} and {v} are not adjacent"),
            Self::TooShortForCycle => write!(f, "a cycle needs at least three vertices"),
            Self::NotSpanning { covered, n } => write!(f, "covers {covered} of {n} vertices"),
        }
    }
}

impl Certificate {
    pub fn path(vertices: Vec<usize>) -> Self {
        Certificate { kind: CertificateKind::Path, vertices }
    }

    pub fn cycle(vertices: Vec<usize>) -> Self {
        Certificate { kind: CertificateKind::Cycle, vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks distinctness and adjacency of consecutive vertices (and of the
    /// closing pair for cycles).
    pub fn validate(&self, g: &Graph) -> Result<(), CertificateError> {
        let vs = &self.vertices;
        if vs.is_empty() {
            return Err(CertificateError::Empty);
        }
        let mut seen = alloc::vec![false; g.n()];
        for &v in vs {
            if v >= g.n() {
                return Err(CertificateError::OutOfRange(v));
            }
            if core::mem::replace(&mut seen[v], true) {
                return Err(CertificateError::Repeated(v));
            }
        }
        for w in vs.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(CertificateError::NotAdjacent(w[0], w[1]));
            }
        }
        if self.kind == CertificateKind::Cycle {
            if vs.len() < 3 {
                return Err(CertificateError::TooShortForCycle);
            }
            let (a, b) = (vs[vs.len() - 1], vs[0]);
            if !g.has_edge(a, b) {
                return Err(CertificateError::NotAdjacent(a, b));
            }
        }
        Ok(())
    }

    /// [`Certificate::validate`] plus coverage of every vertex.
    pub fn validate_hamiltonian(&self, g: &Graph) -> Result<(), CertificateError> {
        self.validate(g)?;
        if self.vertices.len() != g.n() {
            return Err(CertificateError::NotSpanning { covered: self.vertices.len(), n: g.n() });
        }
        Ok(())
    }

    /// Single-line text form: `cycle: v0 v1 ...` or `path: v0 v1 ...`.
    pub fn to_line(&self) -> String {
        use core::fmt::Write;
        let mut s = String::from(match self.kind {
            CertificateKind::Path => "path:",
            CertificateKind::Cycle => "cycle:",
        });
        for v in &self.vertices {
            let _ = write!(s, " {v}");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn validity() {
        let c5 = cycle(5);
        assert!(Certificate::cycle(alloc::vec![0, 1, 2, 3, 4]).validate_hamiltonian(&c5).is_ok());
        assert_eq!(
            Certificate::cycle(alloc::vec![0, 1, 2, 4, 3]).validate(&c5),
            Err(CertificateError::NotAdjacent(2, 4))
        );
        assert_eq!(
            Certificate::path(alloc::vec![0, 1, 0]).validate(&c5),
            Err(CertificateError::Repeated(0))
        );
        assert_eq!(
            Certificate::cycle(alloc::vec![0, 1]).validate(&path(2)),
            Err(CertificateError::TooShortForCycle)
        );
        assert!(matches!(
            Certificate::path(alloc::vec![0, 1]).validate_hamiltonian(&path(3)),
            Err(CertificateError::NotSpanning { covered: 2, n: 3 })
        ));
    }

    #[test]
    fn line_format() {
        assert_eq!(Certificate::cycle(alloc::vec![0, 2, 1]).to_line(), "cycle: 0 2 1");
        assert_eq!(Certificate::path(alloc::vec![4]).to_line(), "path: 4");
    }
}
