use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::regular::default_labels;
use super::RegularMatroid;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Signed incidence matrix of a directed multigraph: `+1` where an edge
/// points into a vertex, `-1` where it points out, `0` otherwise (so a
/// self-loop is a zero column). Rows follow ascending vertex id.
pub fn incidence_matrix(edges: &[(i64, i64)]) -> (Vec<i64>, IntMatrix) {
    let vertices: Vec<i64> = {
        let mut v: Vec<i64> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let index: BTreeMap<i64, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut d = IntMatrix::zeros(vertices.len(), edges.len());
    for (e, &(tail, head)) in edges.iter().enumerate() {
        if tail != head {
            d[(index[&tail], e)] = BigInt::from(-1);
            d[(index[&head], e)] = BigInt::from(1);
        }
    }
    (vertices, d)
}

/// The graphic matroid of a multigraph given as `(tail, head)` pairs.
///
/// One incidence row per connected component is deleted to reach full row
/// rank. Edge `i` (0-based) is labelled `e{i+1}`.
pub fn from_graph(edges: &[(i64, i64)]) -> Result<RegularMatroid> {
    if edges.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let (vertices, d) = incidence_matrix(edges);
    let n = vertices.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, b) in edges {
        let ia = vertices.binary_search(&a).unwrap();
        let ib = vertices.binary_search(&b).unwrap();
        let (ra, rb) = (find(&mut parent, ia), find(&mut parent, ib));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    // the smallest vertex of each component is its own root; drop that row
    let keep: Vec<usize> = (0..n).filter(|&v| find(&mut parent, v) != v).collect();
    Ok(RegularMatroid::from_parts(
        default_labels(edges.len()),
        d.select_rows(&keep),
    ))
}
