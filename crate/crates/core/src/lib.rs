//! Exact spectral graph theory at desk scale.
//!
//! Everything here is pure computation over small undirected simple graphs:
//!
//! - [`graph`]: the [`Graph`] type, named families, complement, line graph,
//!   clique graph, canonical labels, subgraph counting and the graph6 codec.
//! - [`spectral`]: integer adjacency/Laplacian matrices, exact power traces,
//!   exact characteristic polynomials and a Jacobi eigensolver.
//! - [`invariants`]: quantities recoverable from a Laplacian characteristic
//!   polynomial (order, size, components, spanning trees, degree moments).
//! - [`walks`]: covering closed-walk counts, motif censuses of triangle
//!   chains and the closed 7-walk formula.
//! - [`families`]: free-tree enumeration, triangle chains and their clique
//!   trees, centipede recognition.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod families;
pub mod graph;
pub mod invariants;
pub mod spectral;
pub mod walks;

pub use graph::{CanonicalLabel, Family, Graph, GraphError, Motif};
pub use spectral::{IntPolynomial, IntSymMatrix, MatrixKind};
