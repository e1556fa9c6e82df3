use num_traits::{Signed, ToPrimitive, Zero};

use super::gfun::{classify, Classification, GWitness, OneBased};
use super::signing::{build_x, tu_signing};
use super::GramMatrix;
use crate::bounds::Bounds;
use crate::error::Result;
use crate::linalg::IntMatrix;

/// Outcome of the g-feasibility decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GFeasibility {
    /// A totally unimodular `U` with `UᵀU = A`.
    Feasible {
        class: Classification,
        x: IntMatrix,
        certificate: IntMatrix,
    },
    NotGNonnegative { class: Classification },
    /// `X(A)` has no totally unimodular signing.
    NoTuSigning { class: Classification, x: IntMatrix },
    /// `X(A)` has a signing, but none of its sign variants has Gram matrix `A`.
    NoMatchingSigning {
        class: Classification,
        x: IntMatrix,
        signing: IntMatrix,
    },
}

impl GFeasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, GFeasibility::Feasible { .. })
    }

    pub fn certificate(&self) -> Option<&IntMatrix> {
        match self {
            GFeasibility::Feasible { certificate, .. } => Some(certificate),
            _ => None,
        }
    }

    pub fn classification(&self) -> &Classification {
        match self {
            GFeasibility::Feasible { class, .. }
            | GFeasibility::NotGNonnegative { class }
            | GFeasibility::NoTuSigning { class, .. }
            | GFeasibility::NoMatchingSigning { class, .. } => class,
        }
    }

    pub fn x(&self) -> Option<&IntMatrix> {
        match self {
            GFeasibility::Feasible { x, .. }
            | GFeasibility::NoTuSigning { x, .. }
            | GFeasibility::NoMatchingSigning { x, .. } => Some(x),
            GFeasibility::NotGNonnegative { .. } => None,
        }
    }

    /// One-line verdict: `G-FEASIBLE`, `NOT-G-NONNEGATIVE S={…}`,
    /// `NO-TU-SIGNING` or `NO-MATCHING-SIGNING`.
    pub fn verdict(&self) -> String {
        match self {
            GFeasibility::Feasible { .. } => "G-FEASIBLE".into(),
            GFeasibility::NotGNonnegative { class } => match &class.witness {
                Some(GWitness::Negative { subset, .. }) => {
                    format!("NOT-G-NONNEGATIVE S={}", OneBased(subset))
                }
                _ => "NOT-G-NONNEGATIVE".into(),
            },
            GFeasibility::NoTuSigning { .. } => "NO-TU-SIGNING".into(),
            GFeasibility::NoMatchingSigning { .. } => "NO-MATCHING-SIGNING".into(),
        }
    }
}

/// Decides whether `A = UᵀU` for some totally unimodular `U`.
///
/// Any such `U` has the nonzero rows of `|U|` equal to the rows of `X(A)`,
/// and any two totally unimodular signings of `X(A)` differ by negating rows
/// and columns. So one signing `U₀` settles the question: the answer is yes
/// exactly when some column negation `F` has `F U₀ᵀU₀ F = A`.
pub fn is_g_feasible(a: &GramMatrix, bounds: Bounds) -> Result<GFeasibility> {
    let class = classify(a, bounds)?;
    if !class.nonnegative {
        return Ok(GFeasibility::NotGNonnegative { class });
    }
    let x = build_x(&class)?;
    let Some(u0) = tu_signing(&x, bounds)? else {
        return Ok(GFeasibility::NoTuSigning { class, x });
    };
    match matching_column_signs(&u0.gram(), a) {
        Some(f) => {
            let mut certificate = u0;
            for (j, &fj) in f.iter().enumerate() {
                if fj < 0 {
                    for i in 0..certificate.rows() {
                        certificate[(i, j)] = -&certificate[(i, j)];
                    }
                }
            }
            debug_assert_eq!(&certificate.gram(), a.matrix());
            Ok(GFeasibility::Feasible { class, x, certificate })
        }
        None => Ok(GFeasibility::NoMatchingSigning { class, x, signing: u0 }),
    }
}

/// Signs `f` with `f_i f_j g_ij = a_ij` for all `i, j`, if they exist.
fn matching_column_signs(g: &IntMatrix, a: &GramMatrix) -> Option<Vec<i8>> {
    let s = a.order();
    if (0..s).any(|i| (0..s).any(|j| g[(i, j)].abs() != a[(i, j)].abs())) {
        return None;
    }
    let rel = |i: usize, j: usize| -> i8 { (g[(i, j)].signum() * a[(i, j)].signum()).to_i8().expect("sign") };
    let mut f = vec![0i8; s];
    for start in 0..s {
        if f[start] != 0 {
            continue;
        }
        f[start] = 1;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in (0..s).filter(|&j| j != i && !a[(i, j)].is_zero()) {
                let want = f[i] * rel(i, j);
                if f[j] == 0 {
                    f[j] = want;
                    stack.push(j);
                } else if f[j] != want {
                    return None;
                }
            }
        }
    }
    Some(f)
}
