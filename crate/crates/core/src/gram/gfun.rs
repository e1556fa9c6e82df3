use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};

use super::GramMatrix;
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::matroid::GroundSubset;

/// A family `C_1, …, C_s` of subsets of a ground set `E` with `|E| ≤ 64`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportFamily {
    ground: usize,
    sets: Vec<u64>,
}

impl SupportFamily {
    pub fn new(ground: usize, sets: Vec<GroundSubset>) -> Result<Self> {
        if ground > 64 {
            return Err(Error::BoundExceeded { what: "support ground set", size: ground, bound: 64 });
        }
        if let Some(c) = sets.iter().find(|c| c.indices().iter().any(|&e| e >= ground)) {
            return Err(Error::Dimension(format!("{c} is not a subset of a {ground}-element set")));
        }
        Ok(SupportFamily {
            ground,
            sets: sets.iter().map(GroundSubset::mask).collect(),
        })
    }

    /// Column supports of `u`, as subsets of its row indices.
    pub fn from_columns(u: &IntMatrix) -> Result<Self> {
        let sets = (0..u.cols())
            .map(|j| (0..u.rows()).filter(|&e| !u[(e, j)].is_zero()).collect())
            .collect();
        Self::new(u.rows(), sets)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// `|⋂_{i∈S} C_i|`, with the empty intersection equal to `E`.
    pub fn phi(&self, s: &GroundSubset) -> u64 {
        self.phi_mask(s.mask())
    }

    fn phi_mask(&self, s: u64) -> u64 {
        let all = if self.ground == 64 { u64::MAX } else { (1u64 << self.ground) - 1 };
        bits(s).fold(all, |acc, i| acc & self.sets[i]).count_ones() as u64
    }

    /// Number of elements lying in exactly the sets indexed by `S`.
    pub fn gamma(&self, s: &GroundSubset) -> u64 {
        (0..self.ground)
            .filter(|&e| {
                let hit = (0..self.sets.len()).filter(|&i| self.sets[i] >> e & 1 == 1);
                hit.fold(0u64, |m, i| m | 1 << i) == s.mask()
            })
            .count() as u64
    }

    /// `γ(S)` as the alternating sum of `φ` over supersets of `S`.
    pub fn gamma_alternating(&self, s: &GroundSubset) -> i64 {
        let s_mask = s.mask();
        let free = full_mask(self.sets.len()) & !s_mask;
        submasks(free)
            .map(|t| {
                let term = self.phi_mask(s_mask | t) as i64;
                if t.count_ones() % 2 == 0 { term } else { -term }
            })
            .sum()
    }

    /// `(φ(S), γ(S))`, with `γ` computed both ways.
    pub fn phi_gamma(&self, s: &GroundSubset) -> (u64, u64) {
        let gamma = self.gamma(s);
        assert_eq!(gamma as i64, self.gamma_alternating(s), "inclusion/exclusion for {s}");
        (self.phi(s), gamma)
    }
}

/// Sign class of a triple `{h, i, j}`: the sign of `a_hi · a_ij · a_jh`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TripleSign {
    Positive,
    Null,
    Negative,
}

pub fn triple_sign(a: &GramMatrix, h: usize, i: usize, j: usize) -> Result<TripleSign> {
    let s = a.order();
    if h == i || i == j || h == j {
        return Err(Error::Domain(format!("triple {{{h},{i},{j}}} repeats an index")));
    }
    if h >= s || i >= s || j >= s {
        return Err(Error::Dimension(format!("triple {{{h},{i},{j}}} outside order {s}")));
    }
    let p = &a[(h, i)] * &a[(i, j)] * &a[(j, h)];
    Ok(if p.is_positive() {
        TripleSign::Positive
    } else if p.is_negative() {
        TripleSign::Negative
    } else {
        TripleSign::Null
    })
}

/// All negative triples, as sorted index triples in lexicographic order.
pub fn delta(a: &GramMatrix) -> Vec<[usize; 3]> {
    let s = a.order();
    let mut out = Vec::new();
    for h in 0..s {
        for i in h + 1..s {
            for j in i + 1..s {
                if triple_sign(a, h, i, j).expect("distinct") == TripleSign::Negative {
                    out.push([h, i, j]);
                }
            }
        }
    }
    out
}

fn full_mask(s: usize) -> u64 {
    if s == 64 { u64::MAX } else { (1u64 << s) - 1 }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

/// All submasks of `mask`, starting from `mask` itself and ending at 0.
fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

/// Entries of `a` as `i64`, so the subset tables can use machine arithmetic.
fn small_entries(a: &GramMatrix) -> Result<Vec<Vec<i64>>> {
    let s = a.order();
    (0..s)
        .map(|i| {
            (0..s)
                .map(|j| {
                    a[(i, j)]
                        .to_i64()
                        .filter(|v| v.unsigned_abs() < 1 << 40)
                        .ok_or_else(|| Error::Domain(format!("entry ({},{}) is too large", i + 1, j + 1)))
                })
                .collect()
        })
        .collect()
}

/// `f_A(S)` for a single subset.
pub fn f_value(a: &GramMatrix, s: &GroundSubset) -> Result<i64> {
    let e = small_entries(a)?;
    check_subset(a, s)?;
    let idx = s.indices();
    Ok(match idx {
        [] => 0,
        [i] => e[*i][*i],
        _ => {
            for (x, &h) in idx.iter().enumerate() {
                for (y, &i) in idx.iter().enumerate().skip(x + 1) {
                    for &j in &idx[y + 1..] {
                        if e[h][i] * e[i][j] * e[j][h] < 0 {
                            return Ok(0);
                        }
                    }
                }
            }
            let mut m = i64::MAX;
            for (x, &i) in idx.iter().enumerate() {
                for &j in &idx[x + 1..] {
                    m = m.min(e[i][j].abs());
                }
            }
            m
        }
    })
}

/// `g_A(S)` as the alternating sum of `f_A` over supersets of `S`.
pub fn g_value(a: &GramMatrix, s: &GroundSubset, bounds: Bounds) -> Result<i64> {
    Bounds::check("Gram order", a.order(), bounds.gram_order)?;
    check_subset(a, s)?;
    let free = full_mask(a.order()) & !s.mask();
    let mut g = 0;
    for t in submasks(free) {
        let f = f_value(a, &GroundSubset::from_mask(s.mask() | t))?;
        g += if t.count_ones() % 2 == 0 { f } else { -f };
    }
    Ok(g)
}

fn check_subset(a: &GramMatrix, s: &GroundSubset) -> Result<()> {
    match s.indices().last() {
        Some(&i) if i >= a.order() => Err(Error::Dimension(format!(
            "{s} is not a subset of an index set of size {}",
            a.order()
        ))),
        _ => Ok(()),
    }
}

/// `f_A` and `g_A` over all `2^s` subsets, indexed by bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GTable {
    order: usize,
    f: Vec<i64>,
    g: Vec<i64>,
}

impl GTable {
    /// Builds `f_A` by a pass over subsets in increasing order, then `g_A`
    /// by the superset Möbius transform.
    pub fn new(a: &GramMatrix, bounds: Bounds) -> Result<Self> {
        let s = a.order();
        Bounds::check("Gram order", s, bounds.gram_order)?;
        let e = small_entries(a)?;
        // neg_pairs[t][i]: indices h with {h, i, t} a negative triple
        let mut neg_pairs = vec![vec![0u64; s]; s];
        for t in 0..s {
            for i in 0..s {
                for h in 0..s {
                    if h != i && h != t && i != t && e[h][i] * e[i][t] * e[t][h] < 0 {
                        neg_pairs[t][i] |= 1 << h;
                    }
                }
            }
        }
        let n = 1usize << s;
        let mut has_neg = vec![false; n];
        let mut min_pair = vec![i64::MAX; n];
        let mut f = vec![0i64; n];
        for mask in 1..n {
            let t = 63 - (mask as u64).leading_zeros() as usize;
            let rest = mask & !(1 << t);
            if rest == 0 {
                f[mask] = e[t][t];
                continue;
            }
            let mut neg = has_neg[rest];
            let mut mp = min_pair[rest];
            for i in bits(rest as u64) {
                mp = mp.min(e[i][t].abs());
                neg = neg || neg_pairs[t][i] & rest as u64 != 0;
            }
            has_neg[mask] = neg;
            min_pair[mask] = mp;
            f[mask] = if neg { 0 } else { mp };
        }
        let mut g = f.clone();
        for b in 0..s {
            for mask in 0..n {
                if mask >> b & 1 == 0 {
                    g[mask] -= g[mask | 1 << b];
                }
            }
        }
        Ok(GTable { order: s, f, g })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn f(&self, s: &GroundSubset) -> i64 {
        self.f[s.mask() as usize]
    }

    pub fn g(&self, s: &GroundSubset) -> i64 {
        self.g[s.mask() as usize]
    }

    /// Nonempty subsets with nonzero `g`, in canonical order (descending
    /// size, then lexicographic), with their `g` values.
    pub fn support(&self) -> Vec<(GroundSubset, i64)> {
        let mut out: Vec<(GroundSubset, i64)> = (1..self.g.len())
            .filter(|&m| self.g[m] != 0)
            .map(|m| (GroundSubset::from_mask(m as u64), self.g[m]))
            .collect();
        out.sort_by(|(a, _), (b, _)| canonical(a, b));
        out
    }

    /// Every subset with its `f` and `g` values, in canonical order.
    pub fn rows(&self) -> Vec<(GroundSubset, i64, i64)> {
        let mut out: Vec<(GroundSubset, i64, i64)> = (0..self.g.len())
            .map(|m| (GroundSubset::from_mask(m as u64), self.f[m], self.g[m]))
            .collect();
        out.sort_by(|(a, _, _), (b, _, _)| canonical(a, b));
        out
    }
}

/// Descending size, then lexicographic on the sorted index lists.
pub(crate) fn canonical(a: &GroundSubset, b: &GroundSubset) -> std::cmp::Ordering {
    b.len().cmp(&a.len()).then_with(|| a.indices().cmp(b.indices()))
}

/// Why a matrix fails to be g-nonnegative or g-positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GWitness {
    /// A nonempty subset with `g_A(S) < 0`.
    Negative { subset: GroundSubset, g: i64 },
    /// A singleton with `g_A({i}) = 0`.
    ZeroSingleton { index: usize },
}

/// Position of a matrix in the g-nonnegative / g-positive taxonomy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub nonnegative: bool,
    pub positive: bool,
    pub witness: Option<GWitness>,
    pub table: GTable,
}

impl Classification {
    /// Number of rows of `X(A)`, namely `-g_A(∅)`.
    pub fn k(&self) -> i64 {
        -self.table.g[0]
    }

    pub fn label(&self) -> &'static str {
        match (self.nonnegative, self.positive) {
            (_, true) => "G-POSITIVE",
            (true, false) => "G-NONNEGATIVE",
            _ => "NOT-G-NONNEGATIVE",
        }
    }
}

pub fn classify(a: &GramMatrix, bounds: Bounds) -> Result<Classification> {
    let table = GTable::new(a, bounds)?;
    let s = a.order();
    // report the smallest violating subset, lexicographically first among equals
    let negative = table
        .support()
        .into_iter()
        .filter(|(_, g)| *g < 0)
        .min_by(|(x, _), (y, _)| x.len().cmp(&y.len()).then_with(|| x.indices().cmp(y.indices())));
    let (nonnegative, positive, witness) = match negative {
        Some((subset, g)) => (false, false, Some(GWitness::Negative { subset, g })),
        None => match (0..s).find(|&i| table.g[1 << i] == 0) {
            Some(index) => (true, false, Some(GWitness::ZeroSingleton { index })),
            None => (true, true, None),
        },
    };
    if positive && s > 0 {
        assert!(table.g[0] <= -(s as i64), "g(∅) ≤ -s for g-positive input");
    }
    Ok(Classification { nonnegative, positive, witness, table })
}

/// Renders a subset of `[s]` with 1-based indices, as `{1,2,4}`.
pub struct OneBased<'a>(pub &'a GroundSubset);

impl fmt::Display for OneBased<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.0.indices().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eg1() -> GramMatrix {
        GramMatrix::from_rows(&[[3, 1, 1, 2], [1, 3, 1, 2], [1, 1, 3, 2], [2, 2, 2, 5]]).unwrap()
    }

    fn eg2() -> GramMatrix {
        GramMatrix::from_rows(&[[2, 1, 0, -1], [1, 2, 1, 0], [0, 1, 2, 1], [-1, 0, 1, 2]]).unwrap()
    }

    fn set(ix: &[usize]) -> GroundSubset {
        ix.iter().copied().collect()
    }

    #[test]
    fn phi_and_gamma() {
        let c = SupportFamily::new(1, vec![set(&[0]), set(&[0])]).unwrap();
        assert_eq!(c.phi_gamma(&set(&[0, 1])), (1, 1));
        let c = SupportFamily::new(5, vec![set(&[0, 1]), set(&[1, 2])]).unwrap();
        assert_eq!(c.phi(&set(&[])), 5);
        assert_eq!(c.phi_gamma(&set(&[])), (5, 2));
    }

    #[test]
    fn triples() {
        assert_eq!(triple_sign(&eg2(), 0, 1, 3).unwrap(), TripleSign::Null);
        let a = eg1();
        for [h, i, j] in [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
            assert_eq!(triple_sign(&a, h, i, j).unwrap(), TripleSign::Positive);
        }
        let n = GramMatrix::from_rows(&[[1, 1, -1], [1, 1, 1], [-1, 1, 1]]).unwrap();
        assert_eq!(triple_sign(&n, 0, 1, 2).unwrap(), TripleSign::Negative);
        assert_eq!(delta(&n), vec![[0, 1, 2]]);
        assert_eq!(triple_sign(&n, 0, 0, 2).unwrap_err().code(), "E-DOMAIN");
    }

    #[test]
    fn eg1_values() {
        let a = eg1();
        let t = GTable::new(&a, Bounds::DEFAULT).unwrap();
        assert_eq!(t.g(&set(&[0, 1, 2, 3])), 1);
        assert_eq!(t.g(&set(&[0, 1])), 0);
        assert_eq!(t.g(&set(&[])), -8);
        assert_eq!(t.f(&set(&[])), 0);
        for m in 0..16u64 {
            let s = GroundSubset::from_mask(m);
            assert_eq!(t.f(&s), f_value(&a, &s).unwrap());
            assert_eq!(t.g(&s), g_value(&a, &s, Bounds::DEFAULT).unwrap());
        }
    }

    #[test]
    fn classification() {
        let c = classify(&eg1(), Bounds::DEFAULT).unwrap();
        assert!(c.positive && c.nonnegative);
        assert_eq!(c.k(), 8);
        let c = classify(&eg2(), Bounds::DEFAULT).unwrap();
        assert!(c.nonnegative);
        let ones = GramMatrix::from_rows(&[[1, 1], [1, 1]]).unwrap();
        let c = classify(&ones, Bounds::DEFAULT).unwrap();
        assert!(c.nonnegative && !c.positive);
        assert_eq!(c.witness, Some(GWitness::ZeroSingleton { index: 0 }));
        // a_12 larger than the diagonal forces a negative g
        let bad = GramMatrix::from_rows(&[[1, 2], [2, 1]]).unwrap();
        let c = classify(&bad, Bounds::DEFAULT).unwrap();
        assert!(!c.nonnegative);
        assert_eq!(c.witness, Some(GWitness::Negative { subset: set(&[0]), g: -1 }));
        assert_eq!(c.label(), "NOT-G-NONNEGATIVE");
    }

    #[test]
    fn mobius_agrees_with_direct_sum_on_random_input() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let s = rng.gen_range(1..=5);
            let mut m = IntMatrix::zeros(s, s);
            for i in 0..s {
                m[(i, i)] = rng.gen_range(1..6).into();
                for j in i + 1..s {
                    let v: i64 = rng.gen_range(-3..=3);
                    m[(i, j)] = v.into();
                    m[(j, i)] = v.into();
                }
            }
            let a = GramMatrix::new(m).unwrap();
            let t = GTable::new(&a, Bounds::DEFAULT).unwrap();
            for mask in 0..1u64 << s {
                let sub = GroundSubset::from_mask(mask);
                assert_eq!(t.g(&sub), g_value(&a, &sub, Bounds::DEFAULT).unwrap());
            }
            let total: i64 = (0..1usize << s).map(|m| t.g[m]).sum();
            assert_eq!(total, 0);
        }
    }

    #[test]
    fn one_based_display() {
        assert_eq!(OneBased(&set(&[0, 1, 3])).to_string(), "{1,2,4}");
        assert_eq!(OneBased(&set(&[])).to_string(), "{}");
    }
}
