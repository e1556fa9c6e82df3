//! Exact integer linear algebra: determinants, ranks, integer kernels and
//! unimodularity tests.

mod exact;
mod matrix;
mod unimodular;

pub use exact::{
    determinant, integer_kernel_basis, leading_minors, rank, rational_inverse, row_hermite,
    sharp, solve_integral, solve_rational, unimodular_inverse,
};
pub use matrix::IntMatrix;
pub use unimodular::{is_totally_unimodular, is_weakly_unimodular, MinorWitness, Unimodularity};

pub(crate) use exact::bareiss;
pub(crate) use unimodular::Combinations;
