use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::gfun::{Classification, GWitness, OneBased};
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::linalg::{is_totally_unimodular, Combinations, IntMatrix};
use crate::matroid::GroundSubset;

/// `X(A)`: `g_A(S)` copies of the indicator row of each nonempty `S`.
///
/// Rows come in canonical order (descending size, then lexicographic). For
/// g-positive input one copy of each singleton row is held back and placed
/// last, so the bottom `s` rows form `I_s`.
pub fn build_x(class: &Classification) -> Result<IntMatrix> {
    if let Some(GWitness::Negative { subset, g }) = &class.witness {
        return Err(Error::Domain(format!(
            "not g-nonnegative: g{} = {g}",
            OneBased(subset)
        )));
    }
    let s = class.table.order();
    let support = class.table.support();
    let mut rows: Vec<&GroundSubset> = Vec::new();
    for (set, g) in &support {
        let held = usize::from(class.positive && set.len() == 1);
        for _ in held..*g as usize {
            rows.push(set);
        }
    }
    let singletons: Vec<GroundSubset> = (0..s).map(|i| GroundSubset::from_mask(1 << i)).collect();
    if class.positive {
        rows.extend(singletons.iter());
    }
    debug_assert_eq!(rows.len() as i64, class.k());
    let mut x = IntMatrix::zeros(rows.len(), s);
    for (r, set) in rows.iter().enumerate() {
        for &i in set.indices() {
            x[(r, i)] = BigInt::one();
        }
    }
    Ok(x)
}

/// Searches for a totally unimodular `U` with `|U| = x`.
///
/// Signs on a spanning forest of the row/column incidence graph of `x` are
/// fixed to `+1`, which loses nothing since any signing can be brought to
/// that form by negating rows and columns. The remaining entries are tried
/// `+1` first, rejecting any assignment that completes a square submatrix of
/// order at most 4 with determinant outside `{-1, 0, 1}`; survivors get a
/// full check.
pub fn tu_signing(x: &IntMatrix, bounds: Bounds) -> Result<Option<IntMatrix>> {
    let (r, c) = (x.rows(), x.cols());
    if let Some(v) = x.entries().iter().find(|v| !v.is_zero() && !v.is_one()) {
        return Err(Error::Domain(format!("signing needs a 0/1 matrix, found entry {v}")));
    }
    Bounds::check("TU check order", r.min(c), bounds.tu_order)?;
    let mut parent: Vec<usize> = (0..r + c).collect();
    fn root(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    let mut search = Search {
        r,
        c,
        sign: vec![0; r * c],
        decided: vec![true; r * c],
        free: Vec::new(),
        bounds,
    };
    for i in 0..r {
        for j in 0..c {
            if x[(i, j)].is_zero() {
                continue;
            }
            search.sign[i * c + j] = 1;
            let (a, b) = (root(&mut parent, i), root(&mut parent, r + j));
            if a != b {
                parent[a] = b;
            } else {
                search.decided[i * c + j] = false;
                search.free.push((i, j));
            }
        }
    }
    search.run(0)
}

struct Search {
    r: usize,
    c: usize,
    sign: Vec<i64>,
    decided: Vec<bool>,
    free: Vec<(usize, usize)>,
    bounds: Bounds,
}

impl Search {
    fn run(&mut self, k: usize) -> Result<Option<IntMatrix>> {
        if k == self.free.len() {
            let u = self.matrix();
            return Ok(is_totally_unimodular(&u, self.bounds)?.holds().then_some(u));
        }
        let (i, j) = self.free[k];
        for v in [1, -1] {
            self.sign[i * self.c + j] = v;
            self.decided[i * self.c + j] = true;
            if self.locally_unimodular(i, j) {
                if let Some(u) = self.run(k + 1)? {
                    return Ok(Some(u));
                }
            }
        }
        self.sign[i * self.c + j] = 1;
        self.decided[i * self.c + j] = false;
        Ok(None)
    }

    fn matrix(&self) -> IntMatrix {
        let mut u = IntMatrix::zeros(self.r, self.c);
        for i in 0..self.r {
            for j in 0..self.c {
                u[(i, j)] = self.sign[i * self.c + j].into();
            }
        }
        u
    }

    /// Square submatrices through `(i, j)` of order 2 to 4 whose entries
    /// are all decided have determinant in `{-1, 0, 1}`.
    fn locally_unimodular(&self, i: usize, j: usize) -> bool {
        let other_rows: Vec<usize> = (0..self.r).filter(|&x| x != i).collect();
        let other_cols: Vec<usize> = (0..self.c).filter(|&y| y != j).collect();
        for t in 1..=3usize.min(other_rows.len()).min(other_cols.len()) {
            for rs in Combinations::new(other_rows.len(), t) {
                let rows: Vec<usize> = std::iter::once(i).chain(rs.iter().map(|&x| other_rows[x])).collect();
                for cs in Combinations::new(other_cols.len(), t) {
                    let cols: Vec<usize> =
                        std::iter::once(j).chain(cs.iter().map(|&y| other_cols[y])).collect();
                    let complete = rows
                        .iter()
                        .all(|&x| cols.iter().all(|&y| self.decided[x * self.c + y]));
                    if !complete {
                        continue;
                    }
                    let m: Vec<Vec<i64>> = rows
                        .iter()
                        .map(|&x| cols.iter().map(|&y| self.sign[x * self.c + y]).collect())
                        .collect();
                    if small_det(&m).abs() > 1 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Laplace expansion along the first row; for orders up to 4.
fn small_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => (0..n)
            .filter(|&j| m[0][j] != 0)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(y, _)| y != j).map(|(_, &v)| v).collect())
                    .collect();
                let term = m[0][j] * small_det(&minor);
                if j % 2 == 0 { term } else { -term }
            })
            .sum(),
    }
}

/// Diagonal sign vectors `(h, f)` with `q = diag(h) · u · diag(f)`, if any.
///
/// Signs are propagated along the row/column incidence graph of the common
/// support, starting from `+1` at the first row or column of each component.
pub fn camion_equivalence(u: &IntMatrix, q: &IntMatrix) -> Option<(Vec<i8>, Vec<i8>)> {
    let (r, c) = (u.rows(), u.cols());
    if (q.rows(), q.cols()) != (r, c) {
        return None;
    }
    let sgn = |v: &BigInt| -> i8 { v.signum().to_i8().expect("sign") };
    for i in 0..r {
        for j in 0..c {
            if u[(i, j)].abs() != q[(i, j)].abs() {
                return None;
            }
        }
    }
    // nodes 0..r are rows, r..r+c are columns
    let mut label = vec![0i8; r + c];
    for start in 0..r + c {
        if label[start] != 0 {
            continue;
        }
        label[start] = 1;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let neighbours: Vec<(usize, i8)> = if v < r {
                (0..c)
                    .filter(|&j| !u[(v, j)].is_zero())
                    .map(|j| (r + j, sgn(&u[(v, j)]) * sgn(&q[(v, j)])))
                    .collect()
            } else {
                (0..r)
                    .filter(|&i| !u[(i, v - r)].is_zero())
                    .map(|i| (i, sgn(&u[(i, v - r)]) * sgn(&q[(i, v - r)])))
                    .collect()
            };
            for (w, rel) in neighbours {
                let want = label[v] * rel;
                if label[w] == 0 {
                    label[w] = want;
                    stack.push(w);
                } else if label[w] != want {
                    return None;
                }
            }
        }
    }
    let f = label.split_off(r);
    Some((label, f))
}
