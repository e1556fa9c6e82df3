use crate::error::{Error, Result};

/// Size caps for the exhaustive searches. Every search refuses instances
/// beyond its cap with [`Error::BoundExceeded`] instead of approximating.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest `min(rows, cols)` accepted by the TU and WU checks.
    pub tu_order: usize,
    /// Largest ground set accepted by circuit enumeration.
    pub circuit_ground: usize,
    /// Largest ground set accepted by the isomorphism search.
    pub iso_ground: usize,
    /// Largest Gram order `s` accepted by the subset-lattice functions.
    pub gram_order: usize,
}

impl Bounds {
    pub const DEFAULT: Bounds = Bounds {
        tu_order: 10,
        circuit_ground: 20,
        iso_ground: 12,
        gram_order: 20,
    };

    pub(crate) fn check(what: &'static str, size: usize, bound: usize) -> Result<()> {
        if size > bound {
            Err(Error::BoundExceeded { what, size, bound })
        } else {
            Ok(())
        }
    }
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds::DEFAULT
    }
}
