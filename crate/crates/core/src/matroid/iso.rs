use std::collections::HashSet;

use super::RegularMatroid;
use crate::bounds::Bounds;
use crate::error::Result;

/// Circuit data used by the isomorphism search.
struct CircuitIndex {
    masks: Vec<u64>,
    set: HashSet<u64>,
    /// per element: sorted sizes of the circuits through it
    profiles: Vec<Vec<usize>>,
}

impl CircuitIndex {
    fn new(m: &RegularMatroid, bounds: Bounds) -> Result<Self> {
        let circuits = m.circuits(bounds)?;
        let masks: Vec<u64> = circuits.iter().map(|c| c.mask()).collect();
        let mut profiles = vec![Vec::new(); m.len()];
        for c in &circuits {
            for &e in c.indices() {
                profiles[e].push(c.len());
            }
        }
        profiles.iter_mut().for_each(|p| p.sort_unstable());
        Ok(CircuitIndex {
            set: masks.iter().copied().collect(),
            masks,
            profiles,
        })
    }

    fn count_within(&self, mask: u64) -> usize {
        self.masks.iter().filter(|&&c| c & !mask == 0).count()
    }
}

/// Searches for a bijection of ground sets carrying the circuits of `m`
/// exactly onto the circuits of `n`. Returns the lexicographically least
/// such bijection as `map[i] = image of element i`.
pub fn is_isomorphic(
    m: &RegularMatroid,
    n: &RegularMatroid,
    bounds: Bounds,
) -> Result<Option<Vec<usize>>> {
    Bounds::check("ground set", m.len(), bounds.iso_ground)?;
    Bounds::check("ground set", n.len(), bounds.iso_ground)?;
    if m.len() != n.len() || m.rank() != n.rank() {
        return Ok(None);
    }
    let cm = CircuitIndex::new(m, bounds)?;
    let cn = CircuitIndex::new(n, bounds)?;
    if cm.masks.len() != cn.masks.len() {
        return Ok(None);
    }
    let mut pm = cm.profiles.clone();
    let mut pn = cn.profiles.clone();
    pm.sort();
    pn.sort();
    if pm != pn {
        return Ok(None);
    }
    let k = m.len();
    let candidates: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).filter(|&j| cn.profiles[j] == cm.profiles[i]).collect())
        .collect();
    // circuits of m whose largest element is i become checkable once i is placed
    let mut closing: Vec<Vec<u64>> = vec![Vec::new(); k];
    for &c in &cm.masks {
        closing[63 - c.leading_zeros() as usize].push(c);
    }
    let mut search = Search {
        cm: &cm,
        cn: &cn,
        candidates,
        closing,
        map: vec![usize::MAX; k],
        used: 0,
    };
    Ok(search.extend(0).then_some(search.map))
}

struct Search<'a> {
    cm: &'a CircuitIndex,
    cn: &'a CircuitIndex,
    candidates: Vec<Vec<usize>>,
    closing: Vec<Vec<u64>>,
    map: Vec<usize>,
    used: u64,
}

impl Search<'_> {
    fn image(&self, mask: u64) -> u64 {
        (0..64)
            .filter(|&i| mask >> i & 1 == 1)
            .fold(0, |acc, i| acc | 1 << self.map[i])
    }

    fn extend(&mut self, i: usize) -> bool {
        if i == self.map.len() {
            return true;
        }
        let domain = (1u64 << (i + 1)) - 1;
        for t in 0..self.candidates[i].len() {
            let j = self.candidates[i][t];
            if self.used >> j & 1 == 1 {
                continue;
            }
            self.map[i] = j;
            self.used |= 1 << j;
            let forward = self.closing[i].iter().all(|&c| self.cn.set.contains(&self.image(c)));
            let ok = forward
                && self.cm.count_within(domain) == self.cn.count_within(self.used)
                && self.extend(i + 1);
            if ok {
                return true;
            }
            self.used &= !(1 << j);
            self.map[i] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::from_graph;

    #[test]
    fn bowtie_and_two_triangles() {
        let bowtie = from_graph(&[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let two = from_graph(&[(0, 1), (1, 2), (2, 0), (5, 6), (6, 7), (7, 5)]).unwrap();
        let map = is_isomorphic(&bowtie, &two, Bounds::DEFAULT).unwrap();
        assert_eq!(map, Some(vec![0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn uniform_matroids_differ() {
        let u23 = RegularMatroid::circuit(3);
        let u13 = RegularMatroid::u1(3);
        assert_eq!(is_isomorphic(&u23, &u13, Bounds::DEFAULT).unwrap(), None);
    }

    #[test]
    fn identity_on_self() {
        let k4 = from_graph(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let map = is_isomorphic(&k4, &k4, Bounds::DEFAULT).unwrap().unwrap();
        assert_eq!(map, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn relabelled_graph() {
        let a = from_graph(&[(0, 1), (1, 2), (2, 0), (2, 3), (3, 0)]).unwrap();
        let b = from_graph(&[(2, 3), (3, 0), (0, 1), (1, 2), (2, 0)]).unwrap();
        let map = is_isomorphic(&a, &b, Bounds::DEFAULT).unwrap().unwrap();
        let cb: HashSet<u64> = b.circuits(Bounds::DEFAULT).unwrap().iter().map(|c| c.mask()).collect();
        for c in a.circuits(Bounds::DEFAULT).unwrap() {
            let img = c.indices().iter().fold(0u64, |m, &e| m | 1 << map[e]);
            assert!(cb.contains(&img));
        }
    }

    #[test]
    fn bound_exceeded() {
        let big = RegularMatroid::u1(13);
        assert!(is_isomorphic(&big, &big, Bounds::DEFAULT).is_err());
    }
}
