use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::flow::{FlowLattice, FlowVector};
use crate::error::{Error, Result};
use crate::gram::GramMatrix;

/// Exact `A = Rᵀ D R` with `R` unit upper triangular, so that
/// `xᵀ A x = Σ_k d_k (x_k + Σ_{j>k} r_kj x_j)²`.
struct Ldl {
    d: Vec<BigRational>,
    r: Vec<Vec<BigRational>>,
}

impl Ldl {
    fn new(a: &GramMatrix) -> Self {
        let s = a.order();
        let q = |i: usize, j: usize| BigRational::from(a[(i, j)].clone());
        let mut d = Vec::with_capacity(s);
        let mut r = vec![vec![BigRational::zero(); s]; s];
        for k in 0..s {
            r[k][k] = BigRational::one();
            let mut dk = q(k, k);
            for t in 0..k {
                dk -= &d[t] * &r[t][k] * &r[t][k];
            }
            for j in k + 1..s {
                let mut v = q(k, j);
                for t in 0..k {
                    v -= &d[t] * &r[t][k] * &r[t][j];
                }
                r[k][j] = v / &dk;
            }
            d.push(dk);
        }
        Ldl { d, r }
    }
}

/// Every coefficient vector `x` with `xᵀ A x ≤ bound`, including zero,
/// in lexicographic order.
///
/// Fincke–Pohst enumeration with exact rational arithmetic: coordinates are
/// fixed from the last to the first, and each level's admissible integers
/// form an interval around the exactly computed centre.
pub fn short_vectors(gram: &GramMatrix, bound: &BigInt) -> Vec<Vec<BigInt>> {
    let s = gram.order();
    let mut out = Vec::new();
    if bound.is_negative() {
        return out;
    }
    let ldl = Ldl::new(gram);
    let mut x = vec![BigInt::zero(); s];
    descend(&ldl, s, BigRational::from(bound.clone()), &mut x, &mut out);
    out.sort();
    out
}

fn descend(
    ldl: &Ldl,
    level: usize,
    budget: BigRational,
    x: &mut Vec<BigInt>,
    out: &mut Vec<Vec<BigInt>>,
) {
    if level == 0 {
        out.push(x.clone());
        return;
    }
    let k = level - 1;
    let s = x.len();
    let mut centre = BigRational::zero();
    for j in k + 1..s {
        centre -= &ldl.r[k][j] * BigRational::from(x[j].clone());
    }
    let dk = &ldl.d[k];
    let cost = |v: &BigInt| {
        let t = BigRational::from(v.clone()) - &centre;
        dk * &t * &t
    };
    let start = centre.floor().to_integer();
    let mut v = start.clone();
    loop {
        let c = cost(&v);
        if c > budget {
            break;
        }
        x[k] = v.clone();
        descend(ldl, k, &budget - c, x, out);
        v -= 1;
    }
    let mut v = start + 1;
    loop {
        let c = cost(&v);
        if c > budget {
            break;
        }
        x[k] = v.clone();
        descend(ldl, k, &budget - c, x, out);
        v += 1;
    }
    x[k] = BigInt::zero();
}

/// Outcome of the metric simplicity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Simplicity {
    /// Every splitting `α = β + γ` into nonzero parts has `⟨β, γ⟩ < 0`.
    Simple,
    /// A splitting with `⟨β, γ⟩ ≥ 0`.
    Split {
        beta: FlowVector,
        gamma: FlowVector,
        inner: BigInt,
    },
}

impl Simplicity {
    pub fn is_simple(&self) -> bool {
        matches!(self, Simplicity::Simple)
    }
}

impl FlowLattice {
    /// Metric simplicity of a lattice element given in ambient coordinates.
    pub fn is_simple_metric(&self, alpha: &FlowVector) -> Result<Simplicity> {
        let x = self.coefficients(alpha)?;
        self.is_simple_metric_coeffs(&x)
    }

    /// Metric simplicity of the element with basis coefficients `x`.
    ///
    /// A splitting `α = β + γ` with `⟨β, γ⟩ ≥ 0` forces `⟨β, β⟩ ≤ ⟨α, α⟩`, so
    /// it suffices to scan the lattice vectors inside that ellipsoid. The
    /// witness returned has the lexicographically least coefficient vector.
    pub fn is_simple_metric_coeffs(&self, x: &[BigInt]) -> Result<Simplicity> {
        if x.len() != self.rank() {
            return Err(Error::Dimension(format!(
                "{} coefficients for a lattice of rank {}",
                x.len(),
                self.rank()
            )));
        }
        if x.iter().all(Zero::is_zero) {
            return Err(Error::Domain("simple elements are nonzero".into()));
        }
        let norm = self.inner(x, x);
        for y in short_vectors(self.gram(), &norm) {
            if y.iter().all(Zero::is_zero) || y == x {
                continue;
            }
            let inner = self.inner(&y, x) - self.inner(&y, &y);
            if !inner.is_negative() {
                let z: Vec<BigInt> = x.iter().zip(&y).map(|(a, b)| a - b).collect();
                return Ok(Simplicity::Split {
                    beta: self.vector(&y)?,
                    gamma: self.vector(&z)?,
                    inner,
                });
            }
        }
        Ok(Simplicity::Simple)
    }

    /// Coefficient vectors of all simple elements of norm at most `bound`,
    /// found with a single enumeration.
    pub fn simple_elements(&self, bound: &BigInt) -> Vec<Vec<BigInt>> {
        let mut vectors: Vec<(BigInt, Vec<BigInt>, Vec<BigInt>)> = short_vectors(self.gram(), bound)
            .into_iter()
            .filter(|v| v.iter().any(|c| !c.is_zero()))
            .map(|v| {
                let gv = self.gram().mul_vec(&v).expect("square");
                let n: BigInt = v.iter().zip(&gv).map(|(a, b)| a * b).sum();
                (n, v, gv)
            })
            .collect();
        vectors.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out = Vec::new();
        for (na, a, ga) in &vectors {
            let splits = vectors
                .iter()
                .take_while(|(nb, _, _)| nb <= na)
                .any(|(nb, b, _)| {
                    b != a && {
                        let ab: BigInt = b.iter().zip(ga).map(|(p, q)| p * q).sum();
                        !(ab - nb).is_negative()
                    }
                });
            if !splits {
                out.push(a.clone());
            }
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::from_graph;
    use crate::lattice::simple_flows;
    use crate::Bounds;

    fn box_enumeration(g: &GramMatrix, bound: i64, radius: i64) -> Vec<Vec<BigInt>> {
        let s = g.order();
        let mut out = Vec::new();
        let mut x = vec![-radius; s];
        loop {
            let v: Vec<BigInt> = x.iter().map(|&c| BigInt::from(c)).collect();
            let gv = g.mul_vec(&v).unwrap();
            let n: BigInt = v.iter().zip(&gv).map(|(a, b)| a * b).sum();
            if n <= BigInt::from(bound) {
                out.push(v);
            }
            let mut i = 0;
            while i < s && x[i] == radius {
                x[i] = -radius;
                i += 1;
            }
            if i == s {
                break;
            }
            x[i] += 1;
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_box_search() {
        let grams = [
            GramMatrix::from_rows(&[[2, -1, 0], [-1, 2, -1], [0, -1, 2]]).unwrap(),
            GramMatrix::from_rows(&[[3, 1, 1], [1, 3, -1], [1, -1, 3]]).unwrap(),
            GramMatrix::from_rows(&[[4, 2], [2, 5]]).unwrap(),
            GramMatrix::from_rows(&[[1]]).unwrap(),
        ];
        for g in &grams {
            for bound in 0..=8 {
                // radius 8 covers every vector of norm ≤ 8 for these forms
                assert_eq!(short_vectors(g, &BigInt::from(bound)), box_enumeration(g, bound, 8));
            }
        }
    }

    #[test]
    fn zero_rank_lattice() {
        let g = GramMatrix::new(crate::IntMatrix::zeros(0, 0)).unwrap();
        assert_eq!(short_vectors(&g, &BigInt::from(5)), vec![Vec::<BigInt>::new()]);
    }

    #[test]
    fn triangle_simplicity() {
        let t = from_graph(&[(1, 2), (2, 3), (3, 1)]).unwrap();
        let lat = FlowLattice::fundamental(&t, &t.first_base()).unwrap();
        let a = lat.basis_vectors()[0].clone();
        assert!(lat.is_simple_metric(&a).unwrap().is_simple());
        match lat.is_simple_metric(&a.scaled(&BigInt::from(2))).unwrap() {
            Simplicity::Split { beta, gamma, inner } => {
                assert_eq!(beta, a);
                assert_eq!(gamma, a);
                assert_eq!(inner, BigInt::from(3));
            }
            Simplicity::Simple => panic!("2α splits"),
        }
        assert_eq!(
            lat.is_simple_metric(&FlowVector::zero(3)).unwrap_err().code(),
            "E-DOMAIN"
        );
    }

    #[test]
    fn batch_agrees_with_single_calls() {
        let g = from_graph(&[(0, 1), (1, 2), (2, 0), (2, 3), (3, 0)]).unwrap();
        let lat = FlowLattice::fundamental(&g, &g.first_base()).unwrap();
        let bound = BigInt::from(8);
        let batch = lat.simple_elements(&bound);
        for x in short_vectors(lat.gram(), &bound).into_iter().filter(|x| x.iter().any(|c| !c.is_zero())) {
            let single = lat.is_simple_metric_coeffs(&x).unwrap().is_simple();
            assert_eq!(single, batch.contains(&x));
        }
        assert_eq!(batch.len(), simple_flows(&g, Bounds::DEFAULT).unwrap().len());
    }
}
