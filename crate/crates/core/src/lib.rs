//! Lattices of integer flows and cuts of regular matroids.

pub mod bounds;
pub mod error;
pub mod gram;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod matroid;
pub mod reconstruct;

pub use bounds::Bounds;
pub use error::{Error, Result};
pub use gram::GramMatrix;
pub use lattice::{FlowLattice, FlowVector};
pub use linalg::IntMatrix;
pub use matroid::{from_graph, GroundSubset, RegularMatroid};
