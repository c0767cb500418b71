use std::collections::HashSet;

use super::PatternSpec;
use crate::graph::Graph;

/// Every assignment of the potential edges over a fixed set of `u` indices.
///
/// Bit `k` of an assignment mask selects the `k`-th potential edge: first the
/// U-pairs in lexicographic order, then the rings in index order.
#[derive(Clone, Debug)]
pub struct PatternSpace {
    indices: Vec<u8>,
    pairs: Vec<(u8, u8)>,
}

impl PatternSpace {
    /// Indices outside `1..=5` and repeats are dropped.
    pub fn new(indices: &[u8]) -> Self {
        let mut idx: Vec<u8> = indices.iter().copied().filter(|i| (1..=5).contains(i)).collect();
        idx.sort_unstable();
        idx.dedup();
        let mut pairs = Vec::new();
        for (k, &a) in idx.iter().enumerate() {
            for &b in &idx[k + 1..] {
                pairs.push((a, b));
            }
        }
        PatternSpace { indices: idx, pairs }
    }

    pub fn indices(&self) -> &[u8] {
        &self.indices
    }

    pub fn potential_edges(&self) -> usize {
        self.pairs.len() + self.indices.len()
    }

    /// `2^(C(k,2) + k)`.
    pub fn len(&self) -> usize {
        1 << self.potential_edges()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spec(&self, assignment: usize) -> PatternSpec {
        let p = self.pairs.len();
        let edges = (0..p).filter(|&k| assignment >> k & 1 == 1).map(|k| self.pairs[k]);
        let rings = (0..self.indices.len()).filter(|&k| assignment >> (p + k) & 1 == 1).map(|k| self.indices[k]);
        PatternSpec::from_parts(self.indices.iter().copied(), edges, rings).expect("indices in range")
    }

    pub fn iter(&self) -> impl Iterator<Item = PatternSpec> + '_ {
        (0..self.len()).map(|a| self.spec(a))
    }
}

/// All pattern graphs over `u_indices`, in assignment order. With `dedup`,
/// only the first graph of each isomorphism class is kept.
pub fn enumerate_pattern_graphs(u_indices: &[u8], dedup: bool) -> Vec<(PatternSpec, Graph)> {
    let space = PatternSpace::new(u_indices);
    let mut seen = HashSet::new();
    space
        .iter()
        .map(|s| {
            let g = s.realize();
            (s, g)
        })
        .filter(|(_, g)| !dedup || seen.insert(g.canonical_form()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_pattern_graphs(&[], false).len(), 1);
        assert_eq!(enumerate_pattern_graphs(&[1, 2], false).len(), 8);
        assert_eq!(PatternSpace::new(&[1, 2, 3, 4, 5]).len(), 32768);
        assert_eq!(PatternSpace::new(&[1, 2, 3]).len(), 64);
    }

    #[test]
    fn first_and_last_assignment() {
        let space = PatternSpace::new(&[1, 2, 3]);
        assert_eq!(space.spec(0).to_string(), "(1|2|3)");
        assert_eq!(space.spec(space.len() - 1).to_string(), "(1*2*3*1)");
    }

    #[test]
    fn dedup_shrinks() {
        let all = enumerate_pattern_graphs(&[1, 2], false);
        let uniq = enumerate_pattern_graphs(&[1, 2], true);
        assert!(uniq.len() < all.len());
        let forms: HashSet<_> = uniq.iter().map(|(_, g)| g.canonical_form()).collect();
        assert_eq!(forms.len(), uniq.len());
    }
}
