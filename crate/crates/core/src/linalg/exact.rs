use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Exact determinant by Bareiss fraction-free elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    Ok(bareiss(m.to_rows()))
}

pub(crate) fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Rank over the rationals.
pub fn rank(m: &IntMatrix) -> usize {
    let mut rows = m.to_rows();
    echelon(&mut rows, m.cols()).len()
}

/// Fraction-free row echelon form in place; returns the pivot columns.
/// Rows are kept primitive (content divided out) to keep entries small.
pub(crate) fn echelon(rows: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let a = pivot_row[c].clone();
            let b = row[c].clone();
            for j in c..cols {
                row[j] = &row[j] * &a - &pivot_row[j] * &b;
            }
            make_primitive(row);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        v.iter_mut().for_each(|x| *x = &*x / &g);
    }
}

/// Unimodular row reduction of `rows` on the first `cols` columns (the
/// remaining columns ride along). Returns the number of nonzero rows in
/// the reduced part; those come first.
fn unimodular_echelon(rows: &mut [Vec<BigInt>], col_order: &[usize]) -> usize {
    let mut r = 0;
    for &c in col_order {
        if r == rows.len() {
            break;
        }
        loop {
            // smallest nonzero |entry| in column c among rows r.. becomes the pivot
            let Some(p) = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by_key(|&i| rows[i][c].abs())
            else {
                break;
            };
            rows.swap(r, p);
            let mut done = true;
            let (head, tail) = rows.split_at_mut(r + 1);
            let pivot_row = &head[r];
            for row in tail.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&pivot_row[c]);
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    *x -= &q * y;
                }
                if !row[c].is_zero() {
                    done = false;
                }
            }
            if done {
                if rows[r][c].is_negative() {
                    rows[r].iter_mut().for_each(|x| *x = -&*x);
                }
                r += 1;
                break;
            }
        }
    }
    r
}

/// Hermite normal form of the row lattice, pivots scanned in `col_order`.
/// Pivots are positive and entries above each pivot are reduced into
/// `[0, pivot)`. Zero rows are dropped.
pub fn row_hermite(rows: Vec<Vec<BigInt>>, col_order: &[usize]) -> Vec<Vec<BigInt>> {
    let mut rows = rows;
    let rank = unimodular_echelon(&mut rows, col_order);
    rows.truncate(rank);
    let mut pivot_cols = Vec::with_capacity(rank);
    for row in &rows {
        let c = *col_order
            .iter()
            .find(|&&c| !row[c].is_zero())
            .expect("nonzero echelon row");
        pivot_cols.push(c);
    }
    for (k, &c) in pivot_cols.iter().enumerate() {
        let (head, tail) = rows.split_at_mut(k);
        let pivot_row = &tail[0];
        for row in head.iter_mut() {
            let q = row[c].div_floor(&pivot_row[c]);
            if !q.is_zero() {
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    *x -= &q * y;
                }
            }
        }
    }
    rows
}

/// Basis of `ker(m) ∩ Zⁿ`, one basis vector per column.
///
/// The kernel is read off a unimodular transform of `mᵀ`, so the result spans
/// the full integer kernel rather than a finite-index sublattice. The basis
/// is then put in Hermite form with pivots taken from the last coordinate
/// backwards; for `m = [I | L]` this yields exactly `[-L ; I]`.
pub fn integer_kernel_basis(m: &IntMatrix) -> IntMatrix {
    let n = m.cols();
    let r = m.rows();
    // [mᵀ | I_n]
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut row = m.column(j);
            row.extend((0..n).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let order: Vec<usize> = (0..r).collect();
    let rank = unimodular_echelon(&mut rows, &order);
    let kernel: Vec<Vec<BigInt>> = rows[rank..].iter().map(|row| row[r..].to_vec()).collect();
    let reversed: Vec<usize> = (0..n).rev().collect();
    let mut basis = row_hermite(kernel, &reversed);
    // ascending pivot position
    basis.reverse();
    IntMatrix::from_columns(n, &basis).expect("kernel vectors have length n")
}

/// Rational solution of `a · x = b` when one exists (not necessarily unique;
/// free variables are set to zero).
pub fn solve_rational(a: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigRational>>> {
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            a.rows()
        )));
    }
    let n = a.cols();
    let mut rows: Vec<Vec<BigRational>> = (0..a.rows())
        .map(|i| {
            let mut row: Vec<BigRational> = a.row(i).iter().cloned().map(BigRational::from).collect();
            row.push(BigRational::from(b[i].clone()));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        rows[r].iter_mut().for_each(|x| *x *= &inv);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..=n {
                    let d = &rows[r][j] * &f;
                    rows[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![BigRational::zero(); n];
    for (k, &c) in pivots.iter().enumerate() {
        x[c] = rows[k][n].clone();
    }
    Ok(Some(x))
}

/// Solves `a · x = b` for an integral `x`; `None` when no rational solution
/// exists or the (unique) solution is fractional.
pub fn solve_integral(a: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    Ok(solve_rational(a, b)?.and_then(|x| {
        x.into_iter()
            .map(|q| q.is_integer().then(|| q.to_integer()))
            .collect()
    }))
}

/// Exact inverse over the rationals; `None` for singular input.
pub fn rational_inverse(m: &IntMatrix) -> Result<Option<Vec<Vec<BigRational>>>> {
    if !m.is_square() {
        return Err(Error::Dimension("inverse of a non-square matrix".into()));
    }
    let n = m.rows();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<BigInt> = (0..n).map(|i| BigInt::from((i == j) as i64)).collect();
        match solve_rational(m, &e)? {
            Some(x) if rank(m) == n => cols.push(x),
            _ => return Ok(None),
        }
    }
    Ok(Some(
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect(),
    ))
}

/// Inverse of a matrix with determinant ±1, which is integral.
pub fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    let d = determinant(m)?;
    if d.abs() != BigInt::one() {
        return Err(Error::Domain(format!(
            "matrix has determinant {d}, not ±1"
        )));
    }
    let inv = rational_inverse(m)?.expect("nonsingular");
    let n = m.rows();
    let data = inv
        .into_iter()
        .flatten()
        .map(|q| {
            debug_assert!(q.is_integer());
            q.to_integer()
        })
        .collect();
    IntMatrix::new(n, n, data)
}

/// Leading principal minors `det(m[..k, ..k])` for `k = 1..=n`.
pub fn leading_minors(m: &IntMatrix) -> Vec<BigInt> {
    (1..=m.rows().min(m.cols()))
        .map(|k| {
            let idx: Vec<usize> = (0..k).collect();
            bareiss(m.submatrix(&idx, &idx).to_rows())
        })
        .collect()
}

/// Entrywise absolute value.
pub fn sharp(m: &IntMatrix) -> IntMatrix {
    let data = m.entries().iter().map(Signed::abs).collect();
    let mut out = IntMatrix::new(m.rows(), m.cols(), data).expect("same shape");
    if let Some(l) = m.row_labels() {
        out = out.with_row_labels(l.to_vec()).expect("labels already valid");
    }
    if let Some(l) = m.col_labels() {
        out = out.with_col_labels(l.to_vec()).expect("labels already valid");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cofactor_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn determinant_examples() {
        let j3 = IntMatrix::from_rows(&[[0, 1, 1], [1, 0, 1], [1, 1, 0]]);
        assert_eq!(determinant(&j3).unwrap(), BigInt::from(2));
        assert_eq!(determinant(&IntMatrix::identity(4)).unwrap(), BigInt::one());
        let m = IntMatrix::from_rows(&[[2, 1], [1, 1]]);
        assert_eq!(determinant(&m).unwrap(), BigInt::from(cofactor_det(&[vec![2, 1], vec![1, 1]])));
        assert!(matches!(
            determinant(&IntMatrix::zeros(2, 3)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let n = rng.gen_range(0..=5);
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect())
                .collect();
            let m = IntMatrix::from_rows(&rows);
            assert_eq!(determinant(&m).unwrap(), BigInt::from(cofactor_det(&rows)));
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&IntMatrix::from_rows(&[[1, 1, 1]])), 1);
        assert_eq!(rank(&IntMatrix::zeros(3, 3)), 0);
        // K4 incidence: vertices 0..4, edges 01 02 03 12 13 23
        let k4 = IntMatrix::from_rows(&[
            [-1, -1, -1, 0, 0, 0],
            [1, 0, 0, -1, -1, 0],
            [0, 1, 0, 1, 0, -1],
            [0, 0, 1, 0, 1, 1],
        ]);
        assert_eq!(rank(&k4), 3);
    }

    #[test]
    fn kernel_examples() {
        let k = integer_kernel_basis(&IntMatrix::from_rows(&[[1, 1, 1]]));
        assert_eq!(k, IntMatrix::from_rows(&[[-1, -1], [1, 0], [0, 1]]));
        assert_eq!(integer_kernel_basis(&IntMatrix::identity(3)).cols(), 0);
        let m = IntMatrix::from_rows(&[[1, 0, 1], [0, 1, 1]]);
        assert_eq!(integer_kernel_basis(&m), IntMatrix::from_rows(&[[-1], [-1], [1]]));
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x + 4y + 6z = 0 has the primitive kernel vector (1, 1, -1)
        let m = IntMatrix::from_rows(&[[2, 4, 6]]);
        let k = integer_kernel_basis(&m);
        assert_eq!(k.cols(), 2);
        let v = vec![BigInt::from(1), BigInt::from(1), BigInt::from(-1)];
        assert!(solve_integral(&k, &v).unwrap().is_some());
    }

    #[test]
    fn unimodular_inverse_roundtrip() {
        let m = IntMatrix::from_rows(&[[2, 1], [1, 1]]);
        let inv = unimodular_inverse(&m).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), IntMatrix::identity(2));
        assert!(unimodular_inverse(&IntMatrix::from_rows(&[[2]])).is_err());
    }

    #[test]
    fn sharp_examples() {
        let m = IntMatrix::from_rows(&[[-1, 0], [1, -1]]);
        assert_eq!(sharp(&m), IntMatrix::from_rows(&[[1, 0], [1, 1]]));
        assert_eq!(sharp(&m.neg()), sharp(&m));
    }
}
