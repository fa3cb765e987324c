//! Robust solvers for Hamiltonian Cycle, Hamiltonian Path and Long Path on
//! intersection graphs of similarly sized fat objects.
//!
//! Every solver consumes a bare [`Graph`]; geometric instances only exist to
//! generate test inputs and to check structural claims. The pipeline is:
//!
//! 1. a greedy κ-partition around a maximal independent set ([`partition`]),
//! 2. refinement of each part through a separator tree into parts that are
//!    either cliques or highly connected ([`partition::refine_to_linked`]),
//! 3. compression of the graph to a bounded number of vertices per part and an
//!    exact dynamic program over a tree decomposition ([`hamilton`],
//!    [`longpath`]),
//! 4. reconstruction of a certificate in the input graph through spanning
//!    linkages inside highly connected parts ([`linkage`]).
//!
//! Every certificate is validated against the input graph before it is
//! returned.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod certificate;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod hamilton;
pub mod linkage;
pub mod longpath;
pub mod oracle;
pub mod partition;
mod pathdp;
mod splice;
pub mod treewidth;

pub use certificate::{Certificate, CertificateKind};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use partition::{Partition, PartKind, QuotientGraph, SolverConfig};
pub use treewidth::TreeDecomposition;
