mod common;

use common::{arb_graph, random_graph, random_permutation};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use tperfect_core::graph::{canonical_form, graph6_decode, graph6_encode, is_isomorphic};
use tperfect_core::{Graph, VertexSet};

/// Subsets of size >= 3 and odd whose induced subgraph is a single cycle.
fn brute_induced_odd_cycle_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let mut out = Vec::new();
    for bits in 0u32..1 << n {
        let s = VertexSet::from_bits(bits);
        if s.len() < 3 || s.len().is_multiple_of(2) {
            continue;
        }
        let two_regular = s.iter().all(|v| g.neighbors(v).intersection(s).len() == 2);
        if two_regular && g.is_connected_within(s) {
            out.push(s);
        }
    }
    out
}

fn brute_alpha(g: &Graph) -> usize {
    (0u32..1 << g.order()).map(VertexSet::from_bits).filter(|&s| g.is_independent(s)).map(|s| s.len()).max().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph6_round_trip(g in arb_graph(1, 12)) {
        let text = graph6_encode(&g);
        prop_assert_eq!(graph6_decode(&text).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(1, 12)) {
        prop_assert_eq!(g.complement().complement(), g);
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.order() * (g.order() - 1) / 2);
    }

    #[test]
    fn alpha_is_omega_of_complement(g in arb_graph(1, 10)) {
        let a = g.independence_number();
        prop_assert_eq!(a, g.complement().clique_number());
        prop_assert_eq!(a, brute_alpha(&g));
    }

    #[test]
    fn induced_odd_cycles_match_brute_force(g in arb_graph(3, 9)) {
        let mut found: Vec<VertexSet> =
            g.enumerate_induced_odd_cycles().iter().map(|c| c.iter().copied().collect()).collect();
        found.sort_by_key(|s| s.bits());
        let mut want = brute_induced_odd_cycle_sets(&g);
        want.sort_by_key(|s| s.bits());
        prop_assert_eq!(found, want);
        for c in g.enumerate_induced_odd_cycles() {
            for k in 0..c.len() {
                prop_assert!(g.has_edge(c[k], c[(k + 1) % c.len()]));
            }
        }
    }

    #[test]
    fn perfect_means_no_odd_hole_either_side(g in arb_graph(1, 9)) {
        prop_assert_eq!(g.is_perfect(), !g.has_odd_hole() && !g.complement().has_odd_hole());
    }

    #[test]
    fn canonical_form_is_a_class_invariant(g in arb_graph(1, 10), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let h = g.permute(&random_permutation(&mut rng, g.order()));
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &h));
    }
}

#[test]
fn canonical_form_survives_a_thousand_relabelings() {
    let mut rng = StdRng::seed_from_u64(7);
    for n in [5, 8, 10, 12] {
        for _ in 0..4 {
            let g = random_graph(&mut rng, n, 0.5);
            let want = canonical_form(&g);
            for _ in 0..1000 {
                let h = g.permute(&random_permutation(&mut rng, n));
                assert_eq!(canonical_form(&h), want, "{}", graph6_encode(&g));
            }
        }
    }
}

#[test]
fn canonical_form_separates_classes() {
    // edge count and degree sequence are invariants, so distinct ones
    // force distinct forms; equal forms must be isomorphic
    let mut rng = StdRng::seed_from_u64(11);
    let graphs: Vec<Graph> = (0..200).map(|_| random_graph(&mut rng, 7, 0.5)).collect();
    for a in &graphs {
        for b in &graphs {
            let same = canonical_form(a) == canonical_form(b);
            let mut da = a.degrees();
            let mut db = b.degrees();
            da.sort_unstable();
            db.sort_unstable();
            if da != db {
                assert!(!same);
            }
            if same {
                assert!(brute_isomorphic(a, b));
            }
        }
    }
}

fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    fn go(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == a.order() {
            return true;
        }
        for w in 0..b.order() {
            if used[w] || (0..v).any(|u| a.has_edge(u, v) != b.has_edge(map[u], w)) {
                continue;
            }
            used[w] = true;
            map.push(w);
            if go(a, b, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    a.order() == b.order() && go(a, b, &mut Vec::new(), &mut vec![false; b.order()])
}
