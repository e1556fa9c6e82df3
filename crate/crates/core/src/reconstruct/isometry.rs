use crate::bounds::Bounds;
use crate::error::Result;
use crate::matroid::{is_isomorphic, RegularMatroid};

/// Isometry decision between two lattices, reduced to an isomorphism test
/// between the matroids that the lattices determine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryDecision {
    /// The matroid compared on the left, e.g. `M•`.
    pub left: RegularMatroid,
    pub right: RegularMatroid,
    /// `map[i]` is the element of `right` matched with element `i` of `left`.
    pub map: Option<Vec<usize>>,
}

impl IsometryDecision {
    pub fn isometric(&self) -> bool {
        self.map.is_some()
    }

    /// Pairs of matched labels.
    pub fn witness(&self) -> Option<Vec<(&str, &str)>> {
        let map = self.map.as_ref()?;
        Some(
            map.iter()
                .enumerate()
                .map(|(i, &j)| (self.left.ground()[i].as_str(), self.right.ground()[j].as_str()))
                .collect(),
        )
    }
}

fn decide(left: RegularMatroid, right: RegularMatroid, bounds: Bounds) -> Result<IsometryDecision> {
    let map = is_isomorphic(&left, &right, bounds)?;
    Ok(IsometryDecision { left, right, map })
}

/// `Λ(M) ≅ Λ(N)` exactly when `M• ≅ N•`.
pub fn flow_lattices_isometric(
    m: &RegularMatroid,
    n: &RegularMatroid,
    bounds: Bounds,
) -> Result<IsometryDecision> {
    decide(m.contract_coloops(), n.contract_coloops(), bounds)
}

/// `Γ(M) ≅ Γ(N)` exactly when `M° ≅ N°`.
pub fn cut_lattices_isometric(
    m: &RegularMatroid,
    n: &RegularMatroid,
    bounds: Bounds,
) -> Result<IsometryDecision> {
    decide(m.delete_loops(), n.delete_loops(), bounds)
}

/// `Λ(M) ≅ Γ(N)` exactly when `M• ≅ (N*)•`.
pub fn mixed_isometric(
    m: &RegularMatroid,
    n: &RegularMatroid,
    bounds: Bounds,
) -> Result<IsometryDecision> {
    let dual = n.dual(&n.first_base())?;
    decide(m.contract_coloops(), dual.contract_coloops(), bounds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::from_graph;

    #[test]
    fn bowtie_and_two_triangles() {
        let bowtie = from_graph(&[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let two = from_graph(&[(0, 1), (1, 2), (2, 0), (5, 6), (6, 7), (7, 5)]).unwrap();
        assert!(flow_lattices_isometric(&bowtie, &two, Bounds::DEFAULT).unwrap().isometric());
    }

    #[test]
    fn coloops_and_loops_are_invisible() {
        let t = from_graph(&[(1, 2), (2, 3), (3, 1)]).unwrap();
        let tp = from_graph(&[(1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
        let d = flow_lattices_isometric(&t, &tp, Bounds::DEFAULT).unwrap();
        assert_eq!(d.map, Some(vec![0, 1, 2]));
        assert_eq!(d.witness().unwrap()[0], ("e1", "e1"));
        let tl = from_graph(&[(1, 2), (2, 3), (3, 1), (2, 2)]).unwrap();
        assert!(cut_lattices_isometric(&t, &tl, Bounds::DEFAULT).unwrap().isometric());
        assert!(!flow_lattices_isometric(&t, &tl, Bounds::DEFAULT).unwrap().isometric());
    }

    #[test]
    fn mixed_uniform() {
        let u23 = RegularMatroid::circuit(3);
        let u13 = RegularMatroid::u1(3);
        assert!(mixed_isometric(&u23, &u13, Bounds::DEFAULT).unwrap().isometric());
        assert!(!mixed_isometric(&u23, &u23, Bounds::DEFAULT).unwrap().isometric());
    }

    #[test]
    fn k4_is_self_dual() {
        let k4 = from_graph(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let dual = k4.dual(&k4.first_base()).unwrap();
        assert!(flow_lattices_isometric(&k4, &dual, Bounds::DEFAULT).unwrap().isometric());
    }
}
