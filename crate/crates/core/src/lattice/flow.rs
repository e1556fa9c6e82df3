use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::gram::GramMatrix;
use crate::linalg::{integer_kernel_basis, solve_integral, IntMatrix};
use crate::matroid::{GroundSubset, RegularMatroid};

/// An integer vector in the ambient edge space `Z^E`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlowVector(Vec<BigInt>);

impl FlowVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        FlowVector(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        FlowVector(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(m: usize) -> Self {
        FlowVector(vec![BigInt::zero(); m])
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn support(&self) -> GroundSubset {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn dot(&self, other: &FlowVector) -> BigInt {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// `⟨β, β⟩`.
    pub fn norm2(&self) -> BigInt {
        self.dot(self)
    }

    /// `‖β‖ = Σ |β(e)|`.
    pub fn l1(&self) -> BigInt {
        self.0.iter().map(Signed::abs).sum()
    }

    pub fn is_ternary(&self) -> bool {
        self.0.iter().all(|x| x.abs() <= BigInt::one())
    }

    pub fn scaled(&self, k: &BigInt) -> FlowVector {
        FlowVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn neg(&self) -> FlowVector {
        FlowVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &FlowVector) -> FlowVector {
        FlowVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &FlowVector) -> FlowVector {
        FlowVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Sign-normalized: first nonzero coordinate positive.
    pub(crate) fn normalized(self) -> FlowVector {
        match self.0.iter().find(|x| !x.is_zero()) {
            Some(x) if x.is_negative() => self.neg(),
            _ => self,
        }
    }
}

impl fmt::Display for FlowVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", items.join(" "))
    }
}

/// Which lattice of a matroid a [`FlowLattice`] was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeSource {
    /// `Λ(M) = ker(M) ∩ Z^E`.
    Flows(RegularMatroid),
    /// `Γ(M) = Row(M) ∩ Z^E`.
    Cuts(RegularMatroid),
}

/// An integral lattice in `Z^m`, given by a basis (one vector per column)
/// and its cached Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowLattice {
    basis: IntMatrix,
    gram: GramMatrix,
    source: Option<LatticeSource>,
}

/// `Bᵀ B` for linearly independent columns, checked positive definite.
pub fn gram_of(basis: &IntMatrix) -> Result<GramMatrix> {
    let g = basis.gram();
    // a zero column would have a zero diagonal entry; report it as a minor
    if let Some(i) = (0..g.rows()).find(|&i| g[(i, i)].is_zero()) {
        let idx: Vec<usize> = (0..=i).collect();
        let value = crate::linalg::determinant(&g.submatrix(&idx, &idx))?;
        return Err(Error::NotPositiveDefinite { order: i + 1, value });
    }
    let g = GramMatrix::new(g)?;
    g.check_positive_definite()?;
    Ok(g)
}

impl FlowLattice {
    pub fn from_basis(basis: IntMatrix) -> Result<Self> {
        let gram = gram_of(&basis)?;
        Ok(FlowLattice {
            basis: basis.unlabeled(),
            gram,
            source: None,
        })
    }

    /// The fundamental basis `[-L; I_s]` of `Λ(M)` coordinatized by the
    /// base `b`, with rows returned to the original ground order.
    pub fn fundamental(m: &RegularMatroid, b: &GroundSubset) -> Result<Self> {
        let c = m.coordinatize(b)?;
        let (r, n) = (m.rank(), m.len());
        let s = n - r;
        let l = c.l_block();
        let mut basis = IntMatrix::zeros(n, s);
        for (k, &e) in c.order.iter().enumerate() {
            for j in 0..s {
                basis[(e, j)] = if k < r {
                    -&l[(k, j)]
                } else if k - r == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
            }
        }
        let gram = GramMatrix::new(basis.gram())?;
        Ok(FlowLattice {
            basis,
            gram,
            source: Some(LatticeSource::Flows(m.clone())),
        })
    }

    /// The basis of `Γ(M)` given by the rows of `[I_r L]`, in original ground order.
    pub fn cuts(m: &RegularMatroid, b: &GroundSubset) -> Result<Self> {
        let c = m.coordinatize(b)?;
        let (r, n) = (m.rank(), m.len());
        let mut basis = IntMatrix::zeros(n, r);
        for (k, &e) in c.order.iter().enumerate() {
            for i in 0..r {
                basis[(e, i)] = c.standard[(i, k)].clone();
            }
        }
        let gram = GramMatrix::new(basis.gram())?;
        Ok(FlowLattice {
            basis,
            gram,
            source: Some(LatticeSource::Cuts(m.clone())),
        })
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    /// Rank `s` of the lattice.
    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<FlowVector> {
        self.basis.columns().into_iter().map(FlowVector).collect()
    }

    pub fn gram(&self) -> &GramMatrix {
        &self.gram
    }

    pub fn source(&self) -> Option<&LatticeSource> {
        self.source.as_ref()
    }

    /// The ambient vector with the given basis coefficients.
    pub fn vector(&self, coeffs: &[BigInt]) -> Result<FlowVector> {
        Ok(FlowVector(self.basis.mul_vec(coeffs)?))
    }

    /// Basis coefficients of an ambient vector, or an error naming why it is
    /// not a lattice element.
    pub fn coefficients(&self, v: &FlowVector) -> Result<Vec<BigInt>> {
        if v.len() != self.ambient() {
            return Err(Error::Dimension(format!(
                "vector of length {} in a lattice of ambient dimension {}",
                v.len(),
                self.ambient()
            )));
        }
        if let Some(LatticeSource::Flows(m)) = &self.source {
            check_kernel(m, v)?;
        }
        solve_integral(&self.basis, v.coords())?.ok_or_else(|| {
            Error::NotInLattice("not an integral combination of the basis".into())
        })
    }

    pub fn contains(&self, v: &FlowVector) -> bool {
        self.coefficients(v).is_ok()
    }

    /// `xᵀ A y` for coefficient vectors.
    pub fn inner(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let s = self.rank();
        let mut total = BigInt::zero();
        for i in 0..s {
            if x[i].is_zero() {
                continue;
            }
            let row: BigInt = (0..s).map(|j| &self.gram[(i, j)] * &y[j]).sum();
            total += &x[i] * row;
        }
        total
    }
}

/// Verifies `rep · v = 0`, naming the first violated equation.
pub(crate) fn check_kernel(m: &RegularMatroid, v: &FlowVector) -> Result<()> {
    if v.len() != m.len() {
        return Err(Error::Dimension(format!(
            "vector of length {} for a ground set of {}",
            v.len(),
            m.len()
        )));
    }
    let image = m.rep().mul_vec(v.coords())?;
    if let Some(i) = image.iter().position(|x| !x.is_zero()) {
        return Err(Error::NotInLattice(format!(
            "kernel equation {} evaluates to {}",
            i + 1,
            image[i]
        )));
    }
    Ok(())
}

/// The simple flow `α_C` supported on the circuit `C`, first nonzero entry positive.
pub fn simple_flow_on(m: &RegularMatroid, circuit: &GroundSubset) -> Result<FlowVector> {
    let k = integer_kernel_basis(&m.rep().select_columns(circuit.indices()).unlabeled());
    if k.cols() != 1 {
        return Err(Error::Domain(format!(
            "{circuit} is not a circuit (kernel dimension {})",
            k.cols()
        )));
    }
    let mut coords = vec![BigInt::zero(); m.len()];
    for (t, &e) in circuit.indices().iter().enumerate() {
        if k[(t, 0)].is_zero() {
            return Err(Error::Domain(format!("{circuit} is not a circuit")));
        }
        coords[e] = k[(t, 0)].clone();
    }
    let v = FlowVector(coords).normalized();
    debug_assert!(v.is_ternary(), "circuit flows of a TU matrix are ternary");
    Ok(v)
}

/// All simple flows `±α_C`, two per circuit, circuits in canonical order.
pub fn simple_flows(m: &RegularMatroid, bounds: Bounds) -> Result<Vec<FlowVector>> {
    let mut out = Vec::new();
    for c in m.circuits(bounds)? {
        let a = simple_flow_on(m, &c)?;
        out.push(a.neg());
        out.push(a);
    }
    // +α before -α
    for pair in out.chunks_mut(2) {
        pair.swap(0, 1);
    }
    Ok(out)
}
