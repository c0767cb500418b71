#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use tperfect_core::Graph;

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits[k] {
                g.add_edge(i, j).unwrap();
            }
            k += 1;
        }
    }
    g
}

/// Graphs on `lo..=hi` vertices, every edge present with probability 1/2.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let bits: Vec<bool> = (0..n * (n - 1) / 2).map(|_| rng.gen_bool(p)).collect();
    graph_from_bits(n, &bits)
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
