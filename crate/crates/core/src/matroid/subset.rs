use std::fmt;

use crate::error::{Error, Result};

/// A subset of a ground set, stored as sorted distinct indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroundSubset(Vec<usize>);

impl GroundSubset {
    pub fn empty() -> Self {
        GroundSubset(Vec::new())
    }

    /// Validates range and distinctness against a ground set of size `n`.
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<Self> {
        indices.sort_unstable();
        if let Some(w) = indices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Domain(format!("element {} listed twice", w[0])));
        }
        if let Some(&i) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::Domain(format!(
                "element {i} outside a ground set of size {n}"
            )));
        }
        Ok(GroundSubset(indices))
    }

    pub(crate) fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        GroundSubset(indices)
    }

    pub fn from_mask(mask: u64) -> Self {
        GroundSubset((0..64).filter(|&i| mask >> i & 1 == 1).collect())
    }

    /// Bitmask form; only valid for ground sets of at most 64 elements.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &i| {
            debug_assert!(i < 64);
            m | 1 << i
        })
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &GroundSubset) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }

    /// Elements of `0..n` not in this subset.
    pub fn complement(&self, n: usize) -> GroundSubset {
        GroundSubset((0..n).filter(|&i| !self.contains(i)).collect())
    }

    pub fn labels<'a>(&self, ground: &'a [String]) -> Vec<&'a str> {
        self.0.iter().map(|&i| ground[i].as_str()).collect()
    }
}

impl fmt::Display for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl FromIterator<usize> for GroundSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        GroundSubset(v)
    }
}
