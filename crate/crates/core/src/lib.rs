//! Higher independence complexes of graphs.
//!
//! For a graph `G` and `r >= 1`, the r-independence complex `Ind_r(G)` is the
//! simplicial complex whose faces are the vertex sets `A` such that every
//! connected component of the induced subgraph `G[A]` has at most `r`
//! vertices. This crate computes these complexes explicitly, takes their
//! exact reduced integral homology via Smith normal form, solves the exact
//! domination problems that control their connectivity (distance domination
//! `gamma_r`, set domination `omega_r`, strong domination), runs a symbolic
//! homotopy-type engine for chordal graphs, and synthesizes chordal graphs
//! realizing prescribed wedges of spheres.
//!
//! Everything is deterministic: random corpora are driven by explicit seeds,
//! and all public types are immutable after construction, so values can be
//! shared freely across threads.

pub mod chordal;
pub mod complex;
pub mod domination;
pub mod generate;
pub mod graph;
pub mod homology;
pub mod synthesis;
pub mod verify;

pub use chordal::HomotopyType;
pub use complex::{BuildLimits, SimplicialComplex};
pub use domination::DominationCertificate;
pub use graph::Graph;
pub use homology::HomologyProfile;
