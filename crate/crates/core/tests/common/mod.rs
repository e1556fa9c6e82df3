#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use regflow::{from_graph, IntMatrix, RegularMatroid};

/// Multigraphs (loops and parallel edges allowed) on at most 5 vertices.
pub fn graph(max_edges: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    (1i64..=5).prop_flat_map(move |n| prop::collection::vec((0..n, 0..n), 1..=max_edges))
}

pub fn matroid(edges: &[(i64, i64)]) -> RegularMatroid {
    from_graph(edges).expect("nonempty graph")
}

/// Ternary matrices with the given shape bounds.
pub fn ternary(max_rows: usize, max_cols: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(-1i64..=1, r * c).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(c).map(|ch| ch.to_vec()).collect();
            IntMatrix::from_rows(&rows)
        })
    })
}

/// A random unimodular `n × n` matrix: a signed permutation followed by
/// elementary row additions.
pub fn random_unimodular(n: usize, seed: u64) -> IntMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = IntMatrix::zeros(n, n);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    for (i, &j) in perm.iter().enumerate() {
        m[(i, j)] = BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 });
    }
    if n < 2 {
        return m;
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let k = BigInt::from(rng.gen_range(-1i64..=1));
        for c in 0..n {
            let add = &m[(j, c)] * &k;
            m[(i, c)] += add;
        }
    }
    m
}

pub fn det_i64(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det_i64(&minor)
        })
        .sum()
}

pub fn to_i64_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    let flat = m.to_i64().expect("small entries");
    if m.cols() == 0 {
        return vec![Vec::new(); m.rows()];
    }
    flat.chunks(m.cols()).map(|c| c.to_vec()).collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
