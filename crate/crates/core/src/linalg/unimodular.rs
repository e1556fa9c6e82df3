use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::exact::bareiss;
use super::IntMatrix;
use crate::bounds::Bounds;
use crate::error::Result;

/// A square submatrix whose determinant lies outside `{-1, 0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub det: BigInt,
}

impl MinorWitness {
    pub fn order(&self) -> usize {
        self.rows.len()
    }
}

/// Outcome of a unimodularity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Unimodularity {
    Holds,
    Fails(MinorWitness),
}

impl Unimodularity {
    pub fn holds(&self) -> bool {
        matches!(self, Unimodularity::Holds)
    }

    pub fn witness(&self) -> Option<&MinorWitness> {
        match self {
            Unimodularity::Holds => None,
            Unimodularity::Fails(w) => Some(w),
        }
    }
}

/// Decides total unimodularity by enumerating every square submatrix in
/// ascending order (rows lexicographic, then columns lexicographic), and
/// returns the first failing minor.
pub fn is_totally_unimodular(m: &IntMatrix, bounds: Bounds) -> Result<Unimodularity> {
    Bounds::check("min(rows, cols)", m.rows().min(m.cols()), bounds.tu_order)?;
    Ok(match first_bad_minor(m, usize::MAX)? {
        Some(w) => Unimodularity::Fails(w),
        None => Unimodularity::Holds,
    })
}

/// Decides weak unimodularity: only the maximal square submatrices are checked.
pub fn is_weakly_unimodular(m: &IntMatrix, bounds: Bounds) -> Result<Unimodularity> {
    let (r, c) = (m.rows(), m.cols());
    let q = r.min(c);
    Bounds::check("min(rows, cols)", q, bounds.tu_order)?;
    let all_rows: Vec<usize> = (0..r).collect();
    let all_cols: Vec<usize> = (0..c).collect();
    let mut result = Unimodularity::Holds;
    let mut check = |rows: &[usize], cols: &[usize]| {
        let d = bareiss(m.submatrix(rows, cols).to_rows());
        if d.abs() > BigInt::from(1) {
            result = Unimodularity::Fails(MinorWitness {
                rows: rows.to_vec(),
                cols: cols.to_vec(),
                det: d,
            });
            false
        } else {
            true
        }
    };
    if r >= c {
        for rows in Combinations::new(r, q) {
            if !check(&rows, &all_cols) {
                break;
            }
        }
    } else {
        for cols in Combinations::new(c, q) {
            if !check(&all_rows, &cols) {
                break;
            }
        }
    }
    Ok(result)
}

/// First square submatrix of order at most `max_order` with determinant
/// outside `{-1, 0, 1}`, searching in ascending order.
///
/// Minors of order `k` are obtained by Laplace expansion along the first row
/// from the memoized minors of order `k - 1`. Since the search stops at the
/// first failure, every memoized minor lies in `{-1, 0, 1}` and the expansion
/// fits in machine integers.
pub(crate) fn first_bad_minor(m: &IntMatrix, max_order: usize) -> Result<Option<MinorWitness>> {
    let (r, c) = (m.rows(), m.cols());
    for i in 0..r {
        for j in 0..c {
            if m[(i, j)].abs() > BigInt::from(1) {
                return Ok(Some(MinorWitness {
                    rows: vec![i],
                    cols: vec![j],
                    det: m[(i, j)].clone(),
                }));
            }
        }
    }
    let a: Vec<i8> = m
        .entries()
        .iter()
        .map(|x| x.to_i8().expect("entries are ternary"))
        .collect();
    let binom = BinomialTable::new(r.max(c) + 1);

    // level 1: the entries themselves, indexed by colex rank
    let mut prev: Vec<i8> = vec![0; r * c];
    for i in 0..r {
        for j in 0..c {
            prev[i * c + j] = a[i * c + j];
        }
    }
    let top = r.min(c).min(max_order);
    let mut sub = Vec::new();
    for k in 2..=top {
        let n_rows = binom.get(r, k);
        let n_cols = binom.get(c, k);
        let prev_cols = binom.get(c, k - 1);
        let mut next: Vec<i8> = vec![0; n_rows * n_cols];
        for rows in Combinations::new(r, k) {
            let row_rank = binom.rank(&rows);
            let rest_rank = binom.rank(&rows[1..]);
            let first = rows[0];
            for cols in Combinations::new(c, k) {
                binom.sub_ranks(&cols, &mut sub);
                let mut det: i64 = 0;
                for (t, &cj) in cols.iter().enumerate() {
                    let e = a[first * c + cj] as i64;
                    if e == 0 {
                        continue;
                    }
                    let minor = prev[rest_rank * prev_cols + sub[t]] as i64;
                    if t % 2 == 0 {
                        det += e * minor;
                    } else {
                        det -= e * minor;
                    }
                }
                if det.abs() > 1 {
                    return Ok(Some(MinorWitness {
                        rows,
                        cols,
                        det: BigInt::from(det),
                    }));
                }
                next[row_rank * n_cols + binom.rank(&cols)] = det as i8;
            }
        }
        prev = next;
    }
    Ok(None)
}

/// Lexicographic k-subsets of `0..n`.
pub(crate) struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let k = cur.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

struct BinomialTable {
    table: Vec<Vec<usize>>,
}

impl BinomialTable {
    fn new(n: usize) -> Self {
        let mut table = vec![vec![0usize; n + 2]; n + 2];
        for i in 0..=n + 1 {
            table[i][0] = 1;
            for j in 1..=i {
                table[i][j] = table[i - 1][j - 1] + if j < i { table[i - 1][j] } else { 0 };
            }
        }
        BinomialTable { table }
    }

    fn get(&self, n: usize, k: usize) -> usize {
        if k > n {
            0
        } else {
            self.table[n][k]
        }
    }

    /// Colex rank of a sorted combination.
    fn rank(&self, combo: &[usize]) -> usize {
        combo
            .iter()
            .enumerate()
            .map(|(i, &x)| self.get(x, i + 1))
            .sum()
    }

    /// Colex ranks of `combo` with each position removed in turn.
    fn sub_ranks(&self, combo: &[usize], out: &mut Vec<usize>) {
        let k = combo.len();
        out.clear();
        // prefix[i] = sum over j < i of C(combo[j], j + 1)
        // suffix[i] = sum over j > i of C(combo[j], j)
        let mut prefix = 0;
        let suffix_total: Vec<usize> = {
            let mut s = vec![0; k + 1];
            for j in (0..k).rev() {
                s[j] = s[j + 1] + self.get(combo[j], j);
            }
            s
        };
        for i in 0..k {
            out.push(prefix + suffix_total[i + 1]);
            prefix += self.get(combo[i], i + 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::exact::determinant;

    fn brute_first_bad(m: &IntMatrix) -> Option<MinorWitness> {
        for k in 1..=m.rows().min(m.cols()) {
            for rows in Combinations::new(m.rows(), k) {
                for cols in Combinations::new(m.cols(), k) {
                    let d = determinant(&m.submatrix(&rows, &cols)).unwrap();
                    if d.abs() > BigInt::from(1) {
                        return Some(MinorWitness { rows, cols, det: d });
                    }
                }
            }
        }
        None
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<Vec<usize>> = Combinations::new(4, 2).collect();
        assert_eq!(
            all,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn colex_ranks_are_dense() {
        let b = BinomialTable::new(8);
        let mut ranks: Vec<usize> = Combinations::new(7, 3).map(|c| b.rank(&c)).collect();
        ranks.sort();
        assert_eq!(ranks, (0..35).collect::<Vec<_>>());
        let mut sub = Vec::new();
        b.sub_ranks(&[1, 3, 4, 6], &mut sub);
        assert_eq!(sub, vec![b.rank(&[3, 4, 6]), b.rank(&[1, 4, 6]), b.rank(&[1, 3, 6]), b.rank(&[1, 3, 4])]);
    }

    #[test]
    fn tu_examples() {
        let d = Bounds::DEFAULT;
        let inc = IntMatrix::from_rows(&[[-1, 0, 1], [1, -1, 0], [0, 1, -1]]);
        assert!(is_totally_unimodular(&inc, d).unwrap().holds());
        let m = IntMatrix::from_rows(&[[1, 1], [-1, 1]]);
        let w = is_totally_unimodular(&m, d).unwrap();
        assert_eq!(
            w.witness().unwrap(),
            &MinorWitness { rows: vec![0, 1], cols: vec![0, 1], det: BigInt::from(2) }
        );
        let w = is_totally_unimodular(&IntMatrix::from_rows(&[[2]]), d).unwrap();
        assert_eq!(w.witness().unwrap().order(), 1);
    }

    #[test]
    fn wu_examples() {
        let d = Bounds::DEFAULT;
        let m = IntMatrix::from_rows(&[[2, 1], [1, 1]]);
        assert!(is_weakly_unimodular(&m, d).unwrap().holds());
        assert!(!is_totally_unimodular(&m, d).unwrap().holds());
        assert!(!is_weakly_unimodular(&IntMatrix::from_rows(&[[2]]), d).unwrap().holds());
        assert!(is_weakly_unimodular(&IntMatrix::zeros(0, 3), d).unwrap().holds());
    }

    #[test]
    fn bound_is_enforced() {
        let big = IntMatrix::identity(11);
        let err = is_totally_unimodular(&big, Bounds::DEFAULT).unwrap_err();
        assert_eq!(err.code(), "E-BOUND");
        assert!(err.to_string().contains("instance too large for exact enumeration"));
        assert!(is_weakly_unimodular(&big, Bounds::DEFAULT).is_err());
    }

    #[test]
    fn memoized_search_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..3000 {
            let r = rng.gen_range(1..=5);
            let c = rng.gen_range(1..=6);
            let rows: Vec<Vec<i64>> = (0..r)
                .map(|_| (0..c).map(|_| rng.gen_range(-1..=1)).collect())
                .collect();
            let m = IntMatrix::from_rows(&rows);
            assert_eq!(first_bad_minor(&m, usize::MAX).unwrap(), brute_first_bad(&m));
        }
    }
}
