//! Regular matroids given by totally unimodular representations.

mod circuits;
mod graph;
mod iso;
mod regular;
mod subset;

pub use graph::{from_graph, incidence_matrix};
pub use iso::is_isomorphic;
pub use regular::{Coordinatization, RegularMatroid};
pub use subset::GroundSubset;
