use std::ops::Deref;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::linalg::{leading_minors, IntMatrix};

/// A symmetric integer matrix with positive diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix(IntMatrix);

impl GramMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotGram(format!("{}x{} is not square", m.rows(), m.cols())));
        }
        if !m.is_symmetric() {
            return Err(Error::NotGram("not symmetric".into()));
        }
        if let Some(i) = (0..m.rows()).find(|&i| !m[(i, i)].is_positive()) {
            return Err(Error::NotGram(format!(
                "diagonal entry {} is {}, not positive",
                i + 1,
                m[(i, i)]
            )));
        }
        Ok(GramMatrix(m.unlabeled()))
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows))
    }

    /// The order `s`.
    pub fn order(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    /// `|a_ij|`.
    pub fn abs_entry(&self, i: usize, j: usize) -> BigInt {
        self.0[(i, j)].abs()
    }

    /// Checks all leading principal minors are positive; reports the first that is not.
    pub fn check_positive_definite(&self) -> Result<()> {
        for (k, d) in leading_minors(&self.0).into_iter().enumerate() {
            if !d.is_positive() {
                return Err(Error::NotPositiveDefinite { order: k + 1, value: d });
            }
        }
        Ok(())
    }

    pub fn is_positive_definite(&self) -> bool {
        self.check_positive_definite().is_ok()
    }

    /// `F A F` for a diagonal sign matrix `F`.
    pub fn signed(&self, signs: &[i8]) -> GramMatrix {
        let s = self.order();
        let mut m = self.0.clone();
        for i in 0..s {
            for j in 0..s {
                if signs[i] * signs[j] < 0 {
                    m[(i, j)] = -&m[(i, j)];
                }
            }
        }
        GramMatrix(m)
    }
}

impl Deref for GramMatrix {
    type Target = IntMatrix;

    fn deref(&self) -> &IntMatrix {
        &self.0
    }
}
