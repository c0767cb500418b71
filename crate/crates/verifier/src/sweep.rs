//! Candidate generators for the sweeps.

use std::collections::HashSet;

use rayon::prelude::*;
use tperfect_core::graph::{canonical_form, CanonicalForm};
use tperfect_core::pattern::{PatternSpace, PatternSpec};
use tperfect_core::{Graph, VertexSet};

/// All non-isomorphic graphs on `1..=max_n` vertices, `out[n - 1]` holding
/// order `n`.
///
/// Each order is grown from the previous one by adding a vertex with every
/// possible neighborhood and rejecting repeated canonical forms; every graph
/// arises this way since deleting its last vertex leaves a smaller one.
pub fn all_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    let mut out: Vec<Vec<Graph>> = Vec::new();
    let mut prev = vec![Graph::empty(1).expect("order 1")];
    for n in 1..=max_n {
        if n > 1 {
            let grown: Vec<(CanonicalForm, Graph)> = prev
                .par_iter()
                .flat_map_iter(|g| {
                    (0u32..1 << (n - 1)).map(move |nb| {
                        let h = grow(g, VertexSet::from_bits(nb));
                        (canonical_form(&h), h)
                    })
                })
                .collect();
            let mut seen = HashSet::new();
            prev = grown.into_iter().filter(|(c, _)| seen.insert(c.clone())).map(|(_, h)| h).collect();
        }
        out.push(prev.clone());
    }
    out
}

/// `g` plus a new last vertex adjacent to `nb`.
fn grow(g: &Graph, nb: VertexSet) -> Graph {
    let n = g.order();
    let mut h = Graph::empty(n + 1).expect("order in range");
    for (a, b) in g.edges() {
        h.add_edge(a, b).expect("in range");
    }
    for v in nb {
        h.add_edge(v, n).expect("in range");
    }
    h
}

/// Index sets of size `k` drawn from `1..=5`, lexicographic.
pub fn index_sets(k: usize) -> Vec<Vec<u8>> {
    (0u8..32)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (1..=5).filter(|i| m >> (i - 1) & 1 == 1).collect::<Vec<u8>>())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Every pattern graph of the given order (5..=10), raw, in index-set order
/// then assignment order.
pub fn raw_pattern_graphs(order: usize) -> Vec<PatternSpec> {
    assert!((5..=10).contains(&order), "pattern graphs have order 5..=10");
    index_sets(order - 5).iter().flat_map(|idx| PatternSpace::new(idx).iter().collect::<Vec<_>>()).collect()
}

/// A pattern, its graph and the graph's canonical form.
pub type PatternClass = (PatternSpec, Graph, CanonicalForm);

/// One pattern graph per isomorphism class, first occurrence kept.
pub fn distinct_pattern_graphs(order: usize) -> Vec<PatternClass> {
    let raw = raw_pattern_graphs(order);
    let all: Vec<PatternClass> = raw
        .into_par_iter()
        .map(|s| {
            let g = s.realize();
            let c = canonical_form(&g);
            (s, g, c)
        })
        .collect();
    let mut seen = HashSet::new();
    all.into_iter().filter(|(_, _, c)| seen.insert(c.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_census() {
        let counts: Vec<usize> = all_graphs(5).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn index_set_counts() {
        let c: Vec<usize> = (0..=5).map(|k| index_sets(k).len()).collect();
        assert_eq!(c, vec![1, 5, 10, 10, 5, 1]);
        assert_eq!(index_sets(2)[0], vec![1, 2]);
    }

    #[test]
    fn raw_counts() {
        assert_eq!(raw_pattern_graphs(5).len(), 1);
        assert_eq!(raw_pattern_graphs(10).len(), 32768);
        assert_eq!(raw_pattern_graphs(6).len(), 10);
    }
}
