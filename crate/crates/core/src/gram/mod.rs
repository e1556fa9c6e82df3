//! Gram matrices and the combinatorial data read off their entries.

mod feasible;
mod gfun;
mod matrix;
mod signing;

pub use feasible::{is_g_feasible, GFeasibility};
pub use gfun::{
    classify, delta, f_value, g_value, triple_sign, Classification, GTable, GWitness, OneBased,
    SupportFamily, TripleSign,
};
pub use matrix::GramMatrix;
pub use signing::{build_x, camion_equivalence, tu_signing};
