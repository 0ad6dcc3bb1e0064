//! Injective hulls of cycle metrics through integer partitions.
//!
//! The vertices of the tight span of the `N`-cycle are partitions whose outer
//! rim lies in the central band of a discrete Möbius strip. This crate builds
//! those partitions, the folding retraction onto them, the cube complexes
//! `E(X_N)` and `E(C_N)`, their enumeration polynomials, and a brute-force
//! tight-span oracle to check everything against.

pub mod census;
pub mod error;
pub mod hull;
pub mod linalg;
pub mod moebius;
pub mod oracle;
pub mod partitions;

pub use census::{TMatrix, TPoly};
pub use error::{Error, Result};
pub use hull::{Face, HullComplex, VertexFunction};
pub use moebius::{RimPath, Site};
pub use oracle::FiniteMetric;
pub use partitions::{ModelSpace, Partition, SpaceKind};
