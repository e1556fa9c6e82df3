//! Recovering `M•` from the Gram matrix of a lattice basis, and deciding
//! isometry of flow and cut lattices.

mod isometry;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use isometry::{cut_lattices_isometric, flow_lattices_isometric, mixed_isometric, IsometryDecision};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::gram::{is_g_feasible, GFeasibility, GramMatrix};
use crate::linalg::{determinant, unimodular_inverse, Combinations, IntMatrix};
use crate::matroid::RegularMatroid;

/// A change of basis making the certificate contain `I_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveBasis {
    /// `Q = U F`; its rows listed in `identity_rows` form `I_s`.
    pub basis: IntMatrix,
    /// `F = Z⁻¹` for the chosen nonsingular row block `Z` of `U`.
    pub transform: IntMatrix,
    pub identity_rows: Vec<usize>,
    pub gram: GramMatrix,
}

/// Turns a totally unimodular `U` of full column rank into a basis of the
/// same lattice containing `I_s`, using the lexicographically first
/// nonsingular `s × s` row block.
pub fn to_g_positive_basis(u: &IntMatrix) -> Result<PositiveBasis> {
    let (m, s) = (u.rows(), u.cols());
    let all: Vec<usize> = (0..s).collect();
    let rows = Combinations::new(m, s)
        .find(|rows| !determinant(&u.submatrix(rows, &all)).expect("square").is_zero())
        .ok_or_else(|| Error::Domain(format!("{m}x{s} matrix does not have full column rank")))?;
    let transform = unimodular_inverse(&u.submatrix(&rows, &all))?;
    let basis = u.mul(&transform)?;
    let gram = GramMatrix::new(basis.gram())?;
    Ok(PositiveBasis {
        basis,
        transform,
        identity_rows: rows,
        gram,
    })
}

/// Everything recovered from a g-feasible Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionReport {
    pub gram: GramMatrix,
    pub x: IntMatrix,
    /// Totally unimodular `U` with `UᵀU = A`.
    pub certificate: IntMatrix,
    /// `[W; I_s]`: the certificate after the change to a g-positive basis,
    /// with the identity rows moved last.
    pub basis: IntMatrix,
    /// `[I_r L]` with `L = -W`.
    pub standard: IntMatrix,
    /// `M•`, on the ground set `x1, …, xk`.
    pub matroid: RegularMatroid,
    /// Number of zero rows (co-loops) in the supplied ambient basis, when
    /// one was supplied.
    pub zero_rows: Option<usize>,
}

impl ReconstructionReport {
    /// The `L` block of the standard form.
    pub fn l_block(&self) -> IntMatrix {
        let r = self.standard.rows();
        let cols: Vec<usize> = (r..self.standard.cols()).collect();
        self.standard.select_columns(&cols)
    }
}

/// Result of a reconstruction attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reconstruction {
    Matroid(Box<ReconstructionReport>),
    /// The Gram matrix is not g-feasible, so it is not the Gram matrix of a
    /// fundamental basis of any regular matroid.
    NotFeasible(Box<GFeasibility>),
}

impl Reconstruction {
    pub fn report(&self) -> Option<&ReconstructionReport> {
        match self {
            Reconstruction::Matroid(r) => Some(r),
            Reconstruction::NotFeasible(_) => None,
        }
    }

    pub fn verdict(&self) -> String {
        match self {
            Reconstruction::Matroid(_) => "RECONSTRUCTED".into(),
            Reconstruction::NotFeasible(f) => format!("NOT-G-FEASIBLE {}", f.verdict()),
        }
    }
}

/// Recovers `M•` (up to isomorphism) from a g-feasible Gram matrix.
pub fn reconstruct_matroid(a: &GramMatrix, bounds: Bounds) -> Result<Reconstruction> {
    a.check_positive_definite()?;
    let feasibility = is_g_feasible(a, bounds)?;
    let (x, certificate) = match &feasibility {
        GFeasibility::Feasible { x, certificate, .. } => (x.clone(), certificate.clone()),
        _ => return Ok(Reconstruction::NotFeasible(Box::new(feasibility))),
    };
    let positive = to_g_positive_basis(&certificate)?;
    let (k, s) = (certificate.rows(), certificate.cols());
    let r = k - s;
    let mut order: Vec<usize> = (0..k).filter(|i| !positive.identity_rows.contains(i)).collect();
    order.extend(&positive.identity_rows);
    let basis = positive.basis.select_rows(&order);
    let mut standard = IntMatrix::zeros(r, k);
    for i in 0..r {
        standard[(i, i)] = BigInt::one();
        for j in 0..s {
            standard[(i, r + j)] = -&basis[(i, j)];
        }
    }
    let labels: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    let matroid = RegularMatroid::new(labels, standard.clone(), bounds)?;
    Ok(Reconstruction::Matroid(Box::new(ReconstructionReport {
        gram: a.clone(),
        x,
        certificate,
        basis,
        standard,
        matroid,
        zero_rows: None,
    })))
}

/// As [`reconstruct_matroid`], for a lattice basis given by the columns of
/// `basis` in ambient coordinates. The report then also counts the ambient
/// coordinates not seen by the lattice.
pub fn reconstruct_from_basis(basis: &IntMatrix, bounds: Bounds) -> Result<Reconstruction> {
    let gram = GramMatrix::new(basis.gram())?;
    let mut out = reconstruct_matroid(&gram, bounds)?;
    if let Reconstruction::Matroid(report) = &mut out {
        let k = report.certificate.rows();
        report.zero_rows = Some(basis.rows().checked_sub(k).ok_or_else(|| {
            Error::Dimension(format!(
                "{} ambient coordinates cannot carry a lattice needing {k}",
                basis.rows()
            ))
        })?);
    }
    Ok(out)
}
