use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{GroundSubset, RegularMatroid};
use crate::bounds::Bounds;
use crate::error::Result;

/// Echelon basis of the span of a growing independent set of columns. Each
/// stored vector remembers how it was combined from the set's columns, so a
/// dependent column yields its dependency coefficients.
struct Span<'a> {
    columns: &'a [Vec<BigInt>],
    // (pivot, vector, coefficients over ground elements)
    rows: Vec<(usize, Vec<BigInt>, Vec<BigInt>)>,
}

enum Reduced {
    /// `coeffs · columns = 0`, with the tested element's coefficient nonzero.
    Dependent(Vec<BigInt>),
    Independent(usize, Vec<BigInt>, Vec<BigInt>),
}

impl<'a> Span<'a> {
    fn new(columns: &'a [Vec<BigInt>]) -> Self {
        Span {
            columns,
            rows: Vec::new(),
        }
    }

    fn reduce(&self, e: usize) -> Reduced {
        let m = self.columns.len();
        let mut w = self.columns[e].clone();
        let mut c = vec![BigInt::zero(); m];
        c[e] = BigInt::one();
        for (p, b, cb) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let (x, y) = (b[*p].clone(), w[*p].clone());
            for (wi, bi) in w.iter_mut().zip(b) {
                *wi = &x * &*wi - &y * bi;
            }
            for (ci, cbi) in c.iter_mut().zip(cb) {
                *ci = &x * &*ci - &y * cbi;
            }
            let g = w.iter().chain(c.iter()).fold(BigInt::zero(), |g, v| g.gcd(v));
            if !g.is_one() && !g.is_zero() {
                w.iter_mut().for_each(|v| *v = &*v / &g);
                c.iter_mut().for_each(|v| *v = &*v / &g);
            }
        }
        match w.iter().position(|v| !v.is_zero()) {
            None => Reduced::Dependent(c),
            Some(p) => Reduced::Independent(p, w, c),
        }
    }

    fn push(&mut self, p: usize, w: Vec<BigInt>, c: Vec<BigInt>) {
        self.rows.push((p, w, c));
    }

    fn pop(&mut self) {
        self.rows.pop();
    }
}

fn columns_of(m: &RegularMatroid) -> Vec<Vec<BigInt>> {
    m.rep().columns()
}

impl RegularMatroid {
    /// All circuits, sorted by size and then lexicographically.
    ///
    /// Independent sets are grown depth-first in increasing element order; a
    /// circuit `C` is reported exactly once, when `C \ max(C)` is the current
    /// independent set and `max(C)` depends on all of it.
    pub fn circuits(&self, bounds: Bounds) -> Result<Vec<GroundSubset>> {
        Bounds::check("ground set", self.len(), bounds.circuit_ground)?;
        let columns = columns_of(self);
        let mut span = Span::new(&columns);
        let mut current = Vec::new();
        let mut out = Vec::new();
        grow(&mut span, &mut current, 0, &mut out);
        out.sort_by(|a: &GroundSubset, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// The circuit inside `elements` with the smallest largest element
    /// (the colex-least one), or `None` if `elements` is independent.
    pub fn first_circuit_within(&self, elements: &[usize]) -> Option<GroundSubset> {
        let columns = columns_of(self);
        let mut span = Span::new(&columns);
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        for &e in &sorted {
            match span.reduce(e) {
                Reduced::Dependent(c) => {
                    return Some((0..self.len()).filter(|&i| !c[i].is_zero()).collect());
                }
                Reduced::Independent(p, w, c) => span.push(p, w, c),
            }
        }
        None
    }
}

fn grow(span: &mut Span<'_>, current: &mut Vec<usize>, start: usize, out: &mut Vec<GroundSubset>) {
    for e in start..span.columns.len() {
        match span.reduce(e) {
            Reduced::Dependent(c) => {
                if current.iter().all(|&i| !c[i].is_zero()) {
                    let mut circuit = current.clone();
                    circuit.push(e);
                    out.push(GroundSubset::from_sorted(circuit));
                }
            }
            Reduced::Independent(p, w, c) => {
                span.push(p, w, c);
                current.push(e);
                grow(span, current, e + 1, out);
                current.pop();
                span.pop();
            }
        }
    }
}
