use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::GroundSubset;
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::linalg::{
    bareiss, is_totally_unimodular, rank, unimodular_inverse, Combinations, IntMatrix,
    Unimodularity,
};

/// A regular matroid, given by a totally unimodular representation of full
/// row rank whose columns are labelled by the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularMatroid {
    ground: Vec<String>,
    rep: IntMatrix,
}

/// A representation `[I_r L]` coordinatized by a base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coordinatization {
    /// `[I_r L]`, columns labelled in `order`.
    pub standard: IntMatrix,
    /// Column `k` of `standard` is ground element `order[k]`; the base comes first.
    pub order: Vec<usize>,
    pub base: GroundSubset,
    /// The integer-invertible `F` with `F · rep · P = [I_r L]`.
    pub transform: IntMatrix,
}

impl Coordinatization {
    pub fn rank(&self) -> usize {
        self.standard.rows()
    }

    /// The `r × s` block `L`.
    pub fn l_block(&self) -> IntMatrix {
        let r = self.rank();
        let cols: Vec<usize> = (r..self.standard.cols()).collect();
        self.standard.select_columns(&cols).unlabeled()
    }
}

pub(crate) fn default_labels(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("e{i}")).collect()
}

impl RegularMatroid {
    /// Validates a representation. Dependent rows are dropped (the column
    /// matroid does not change); the remaining matrix must be totally
    /// unimodular.
    pub fn new(ground: Vec<String>, rep: IntMatrix, bounds: Bounds) -> Result<Self> {
        if ground.len() != rep.cols() {
            return Err(Error::Dimension(format!(
                "{} labels for {} columns",
                ground.len(),
                rep.cols()
            )));
        }
        let rep = rep.unlabeled().with_col_labels(ground.clone())?;
        if let Unimodularity::Fails(w) = is_totally_unimodular(&rep, bounds)? {
            return Err(Error::NotTotallyUnimodular {
                rows: w.rows,
                cols: w.cols,
                det: w.det,
            });
        }
        let rep = independent_rows(&rep);
        Ok(RegularMatroid { ground, rep })
    }

    /// Uses the matrix's column labels when present, `e1, e2, …` otherwise.
    pub fn from_matrix(rep: IntMatrix, bounds: Bounds) -> Result<Self> {
        let ground = rep
            .col_labels()
            .map(<[String]>::to_vec)
            .unwrap_or_else(|| default_labels(rep.cols()));
        Self::new(ground, rep, bounds)
    }

    /// For representations known to be TU with full row rank.
    pub(crate) fn from_parts(ground: Vec<String>, rep: IntMatrix) -> Self {
        debug_assert_eq!(ground.len(), rep.cols());
        debug_assert_eq!(rank(&rep), rep.rows());
        let rep = rep
            .unlabeled()
            .with_col_labels(ground.clone())
            .expect("ground labels are unique");
        RegularMatroid { ground, rep }
    }

    /// The matroid on no elements.
    pub fn empty() -> Self {
        RegularMatroid {
            ground: Vec::new(),
            rep: IntMatrix::zeros(0, 0),
        }
    }

    /// The free matroid `I_r` (every element a co-loop).
    pub fn free(r: usize) -> Self {
        Self::from_parts(default_labels(r), IntMatrix::identity(r))
    }

    /// The uniform matroid `U_{1,n}`, represented by a single all-ones row.
    pub fn u1(n: usize) -> Self {
        let ones = vec![1i64; n];
        Self::from_parts(default_labels(n), IntMatrix::from_rows(&[ones]))
    }

    /// The uniform matroid `U_{n-1,n}` (an `n`-circuit), as `[I_{n-1} | -1]`.
    pub fn circuit(n: usize) -> Self {
        assert!(n >= 1);
        let rows: Vec<Vec<i64>> = (0..n - 1)
            .map(|i| (0..n).map(|j| if j == i { 1 } else if j == n - 1 { -1 } else { 0 }).collect())
            .collect();
        let rep = if rows.is_empty() {
            IntMatrix::zeros(0, 1)
        } else {
            IntMatrix::from_rows(&rows)
        };
        Self::from_parts(default_labels(n), rep)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn rep(&self) -> &IntMatrix {
        &self.rep
    }

    pub fn rank(&self) -> usize {
        self.rep.rows()
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    /// Corank `s = m - r`, the rank of the flow lattice.
    pub fn corank(&self) -> usize {
        self.len() - self.rank()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.ground.iter().position(|l| l == label)
    }

    /// Rank of a set of elements.
    pub fn rank_of(&self, elements: &[usize]) -> usize {
        rank(&self.rep.select_columns(elements))
    }

    pub fn is_base(&self, b: &GroundSubset) -> bool {
        b.len() == self.rank()
            && !bareiss(self.rep.select_columns(b.indices()).to_rows()).is_zero()
    }

    /// The lexicographically first base, found greedily.
    pub fn first_base(&self) -> GroundSubset {
        let mut chosen = Vec::new();
        for e in 0..self.len() {
            if chosen.len() == self.rank() {
                break;
            }
            chosen.push(e);
            if self.rank_of(&chosen) < chosen.len() {
                chosen.pop();
            }
        }
        GroundSubset::from_sorted(chosen)
    }

    /// All bases, in lexicographic order.
    pub fn bases(&self, bounds: Bounds) -> Result<Vec<GroundSubset>> {
        Bounds::check("ground set", self.len(), bounds.circuit_ground)?;
        Ok(Combinations::new(self.len(), self.rank())
            .map(GroundSubset::from_sorted)
            .filter(|b| self.is_base(b))
            .collect())
    }

    /// Brings the representation into the form `[I_r L]` relative to the base `b`.
    pub fn coordinatize(&self, b: &GroundSubset) -> Result<Coordinatization> {
        let r = self.rank();
        if b.len() != r {
            return Err(Error::NotABase(format!(
                "{} has {} elements, rank is {r}",
                b,
                b.len()
            )));
        }
        if let Some(&e) = b.indices().iter().find(|&&e| e >= self.len()) {
            return Err(Error::NotABase(format!("element {e} is outside the ground set")));
        }
        let basis_cols = self.rep.select_columns(b.indices()).unlabeled();
        let det = bareiss(basis_cols.to_rows());
        if det.is_zero() {
            return Err(Error::NotABase(format!(
                "columns {:?} have vanishing {r}x{r} determinant",
                b.labels(&self.ground)
            )));
        }
        debug_assert!(det.abs().is_one());
        let transform = unimodular_inverse(&basis_cols)?;
        let order: Vec<usize> = b
            .indices()
            .iter()
            .copied()
            .chain(b.complement(self.len()).indices().iter().copied())
            .collect();
        let standard = transform.mul(&self.rep.permute_columns(&order).unlabeled())?;
        let labels = order.iter().map(|&e| self.ground[e].clone()).collect();
        let standard = standard.with_col_labels(labels)?;
        Ok(Coordinatization {
            standard,
            order,
            base: b.clone(),
            transform,
        })
    }

    /// The dual matroid, represented by `[-Lᵀ I_s]` and relabelled back into
    /// the original ground order.
    pub fn dual(&self, b: &GroundSubset) -> Result<RegularMatroid> {
        let c = self.coordinatize(b)?;
        let (r, m) = (self.rank(), self.len());
        let s = m - r;
        let l = c.l_block();
        let mut rep = IntMatrix::zeros(s, m);
        for (k, &e) in c.order.iter().enumerate() {
            for i in 0..s {
                rep[(i, e)] = if k < r {
                    -&l[(k, i)]
                } else if k - r == i {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
            }
        }
        Ok(Self::from_parts(self.ground.clone(), rep))
    }

    /// Loops (zero columns) and co-loops (elements whose deletion drops the rank).
    pub fn loops_and_coloops(&self) -> (GroundSubset, GroundSubset) {
        let loops = (0..self.len()).filter(|&e| self.rep.column_is_zero(e)).collect();
        (loops, self.coloops())
    }

    fn coloops(&self) -> GroundSubset {
        let c = self
            .coordinatize(&self.first_base())
            .expect("first base is a base");
        let l = c.l_block();
        (0..self.rank())
            .filter(|&k| l.row_is_zero(k))
            .map(|k| c.order[k])
            .collect()
    }

    /// `M•`: contracts every co-loop.
    pub fn contract_coloops(&self) -> RegularMatroid {
        let c = self
            .coordinatize(&self.first_base())
            .expect("first base is a base");
        let l = c.l_block();
        let r = self.rank();
        let keep_rows: Vec<usize> = (0..r).filter(|&k| !l.row_is_zero(k)).collect();
        let coloops: GroundSubset = (0..r)
            .filter(|&k| l.row_is_zero(k))
            .map(|k| c.order[k])
            .collect();
        let kept: Vec<usize> = (0..self.len()).filter(|&e| !coloops.contains(e)).collect();
        let position: Vec<usize> = kept
            .iter()
            .map(|&e| c.order.iter().position(|&x| x == e).unwrap())
            .collect();
        let rep = c.standard.unlabeled().submatrix(&keep_rows, &position);
        let ground = kept.iter().map(|&e| self.ground[e].clone()).collect();
        Self::from_parts(ground, rep)
    }

    /// `M°`: deletes every loop.
    pub fn delete_loops(&self) -> RegularMatroid {
        let kept: Vec<usize> = (0..self.len()).filter(|&e| !self.rep.column_is_zero(e)).collect();
        self.restrict(&kept)
    }

    /// Restriction to (deletion of everything outside) `elements`.
    pub fn restrict(&self, elements: &[usize]) -> RegularMatroid {
        let sub = self.rep.select_columns(elements).unlabeled();
        let ground = elements.iter().map(|&e| self.ground[e].clone()).collect();
        Self::from_parts(ground, independent_rows(&sub))
    }

    /// Renames the ground set.
    pub fn with_labels(&self, ground: Vec<String>) -> Result<RegularMatroid> {
        if ground.len() != self.len() {
            return Err(Error::Dimension(format!(
                "{} labels for {} elements",
                ground.len(),
                self.len()
            )));
        }
        let rep = self.rep.clone().unlabeled().with_col_labels(ground.clone())?;
        Ok(RegularMatroid { ground, rep })
    }
}

/// Keeps a maximal set of linearly independent rows, earliest first.
fn independent_rows(m: &IntMatrix) -> IntMatrix {
    let mut keep = Vec::new();
    for i in 0..m.rows() {
        keep.push(i);
        if rank(&m.select_rows(&keep)) < keep.len() {
            keep.pop();
        }
    }
    if keep.len() == m.rows() {
        m.clone()
    } else {
        m.select_rows(&keep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::from_graph;

    fn set(v: &[usize]) -> GroundSubset {
        v.iter().copied().collect()
    }

    #[test]
    fn rejects_non_tu() {
        let m = IntMatrix::from_rows(&[[1, 1], [-1, 1]]);
        let err = RegularMatroid::from_matrix(m, Bounds::DEFAULT).unwrap_err();
        assert_eq!(err.code(), "E-NOT-TU");
    }

    #[test]
    fn drops_dependent_rows() {
        let m = IntMatrix::from_rows(&[[1, 0, 1], [0, 1, 1], [1, 1, 2]]);
        assert!(RegularMatroid::from_matrix(m, Bounds::DEFAULT).is_err());
        let m = IntMatrix::from_rows(&[[1, 0, 1], [0, 1, 1], [1, 0, 1]]);
        let mat = RegularMatroid::from_matrix(m, Bounds::DEFAULT).unwrap();
        assert_eq!(mat.rank(), 2);
    }

    #[test]
    fn coordinatize_triangle() {
        let t = from_graph(&[(1, 2), (2, 3), (3, 1)]).unwrap();
        let c = t.coordinatize(&set(&[0, 1])).unwrap();
        let l = c.l_block();
        assert_eq!(l.rows(), 2);
        assert!(l.entries().iter().all(|x| x.abs().is_one()));
        assert_eq!(c.order, vec![0, 1, 2]);
        assert!(is_totally_unimodular(&c.standard, Bounds::DEFAULT).unwrap().holds());
    }

    #[test]
    fn coordinatize_standard_form_is_fixed() {
        let rep = IntMatrix::from_rows(&[[1, 0, 1, -1], [0, 1, 1, 0]]);
        let m = RegularMatroid::from_matrix(rep.clone(), Bounds::DEFAULT).unwrap();
        let c = m.coordinatize(&set(&[0, 1])).unwrap();
        assert_eq!(c.standard.unlabeled(), rep);
    }

    #[test]
    fn coordinatize_k4_star() {
        // star at vertex 0: edges 01 02 03
        let k4 = from_graph(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = k4.coordinatize(&set(&[0, 1, 2])).unwrap();
        let l = c.l_block();
        assert_eq!((l.rows(), l.cols()), (3, 3));
        for j in 0..3 {
            let nz = (0..3).filter(|&i| !l[(i, j)].is_zero()).count();
            assert!(nz == 2 || nz == 3);
        }
    }

    #[test]
    fn coordinatize_rejects_non_bases() {
        let t = from_graph(&[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(matches!(t.coordinatize(&set(&[0])), Err(Error::NotABase(_))));
        let p = from_graph(&[(1, 2), (1, 2), (2, 3)]).unwrap();
        let err = p.coordinatize(&set(&[0, 1])).unwrap_err();
        assert!(err.to_string().contains("vanishing"));
    }

    #[test]
    fn dual_examples() {
        let free = RegularMatroid::free(3);
        let d = free.dual(&free.first_base()).unwrap();
        assert_eq!((d.rank(), d.len()), (0, 3));
        let (loops, _) = d.loops_and_coloops();
        assert_eq!(loops.len(), 3);

        let t = from_graph(&[(1, 2), (2, 3), (3, 1)]).unwrap();
        let d = t.dual(&t.first_base()).unwrap();
        assert_eq!(d.rank(), 1);
        assert_eq!(d.ground(), t.ground());
    }

    #[test]
    fn loops_and_coloops_examples() {
        let path = from_graph(&[(1, 2), (2, 3)]).unwrap();
        let (l, c) = path.loops_and_coloops();
        assert!(l.is_empty());
        assert_eq!(c, set(&[0, 1]));

        let tl = from_graph(&[(1, 2), (2, 3), (3, 1), (2, 2)]).unwrap();
        let (l, c) = tl.loops_and_coloops();
        assert_eq!(l, set(&[3]));
        assert!(c.is_empty());
    }

    #[test]
    fn minors() {
        let tree = from_graph(&[(1, 2), (2, 3), (2, 4)]).unwrap();
        let t = tree.contract_coloops();
        assert_eq!((t.rank(), t.len()), (0, 0));

        let tp = from_graph(&[(1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
        let t = tp.contract_coloops();
        assert_eq!(t.ground(), &["e1", "e2", "e3"]);
        assert_eq!(t.rank(), 2);
        let (_, c) = t.loops_and_coloops();
        assert!(c.is_empty());

        let tl = from_graph(&[(1, 2), (2, 2), (2, 3), (3, 1)]).unwrap();
        let o = tl.delete_loops();
        assert_eq!(o.ground(), &["e1", "e3", "e4"]);
        assert_eq!(o.rank(), 2);
    }

    #[test]
    fn bases_of_triangle() {
        let t = from_graph(&[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(t.bases(Bounds::DEFAULT).unwrap().len(), 3);
        assert_eq!(t.first_base(), set(&[0, 1]));
    }
}
