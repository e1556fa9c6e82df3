//! Flow and cut lattices, simple flows and metric simplicity.

mod decompose;
mod enumerate;
mod flow;

pub use decompose::{check_consistent, consistent_decompose, decompose_flow};
pub use enumerate::{short_vectors, Simplicity};
pub use flow::{gram_of, simple_flow_on, simple_flows, FlowLattice, FlowVector, LatticeSource};
