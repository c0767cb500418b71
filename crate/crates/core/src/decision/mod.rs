//! t-perfection and the notions built on it: t-minors, minimal
//! t-imperfection, core graphs, and the 5-hole labelling used by the case
//! analyses.

mod classify;
mod hole;
mod minors;

use thiserror::Error;

pub use classify::{Classifier, Verdict};
pub use hole::{check_observation, label_five_hole, HoleLabeling, LabelError, OBSERVATIONS};
pub use minors::{one_step_t_minors, t_contract, MinorOp, TMinor};

use crate::graph::{Graph, GraphError, VertexSet};
use crate::polytope::{
    build_tstab_hrep, enumerate_vertices_with, DdOptions, PolytopeError, RatVector, Rational, VRepresentation,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecisionError {
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("N({0}) is not an independent set")]
    NeighborhoodNotIndependent(usize),
    #[error("N({0}) is empty; delete the vertex instead")]
    EmptyNeighborhood(usize),
    #[error("the graph has no 5-hole")]
    NoFiveHole,
}

/// Outcome of a t-perfection test. `witness` is a fractional vertex of
/// `P(G)` exactly when `t_perfect` is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPerfection {
    pub t_perfect: bool,
    pub witness: Option<RatVector>,
}

/// The fractional vertex with the largest coordinate sum, ties going to the
/// smallest in coordinate order.
fn pick_witness(v: &VRepresentation) -> Option<RatVector> {
    let mut best: Option<(&RatVector, Rational)> = None;
    for x in v.fractional() {
        let s = x.sum();
        if best.as_ref().is_none_or(|(_, b)| s > *b) {
            best = Some((x, s));
        }
    }
    best.map(|(x, _)| x.clone())
}

/// Decides `P(G) = STAB(G)` by enumerating the vertices of `P(G)`.
///
/// A `K4` settles the question at once: `1/3` on its vertices and `0`
/// elsewhere is a vertex of `P(G)` (the four triangle rows and the other
/// non-negativity rows are tight and independent).
pub fn is_t_perfect(g: &Graph) -> Result<TPerfection, DecisionError> {
    is_t_perfect_with(g, &DdOptions::default())
}

pub fn is_t_perfect_with(g: &Graph, opts: &DdOptions) -> Result<TPerfection, DecisionError> {
    if let Some(k) = g.find_clique(4) {
        let n = g.order();
        let third = Rational::new(1, 3);
        let x = RatVector::new((0..n).map(|v| if k.contains(v) { third.clone() } else { Rational::zero() }).collect());
        return Ok(TPerfection { t_perfect: false, witness: Some(x) });
    }
    is_t_perfect_dd(g, opts)
}

/// The same decision without the `K4` shortcut.
pub fn is_t_perfect_dd(g: &Graph, opts: &DdOptions) -> Result<TPerfection, DecisionError> {
    let v = enumerate_vertices_with(&build_tstab_hrep(g), opts)?;
    let witness = pick_witness(&v);
    Ok(TPerfection { t_perfect: witness.is_none(), witness })
}

/// t-imperfect, and every proper t-minor t-perfect. One step suffices since
/// t-perfection is closed under deletions and t-contractions.
pub fn is_minimally_t_imperfect(g: &Graph) -> Result<bool, DecisionError> {
    Classifier::new(DdOptions::default()).is_minimally_t_imperfect(g)
}

/// Every one-step t-minor of `g` and of its complement is t-perfect.
pub fn is_core(g: &Graph) -> Result<bool, DecisionError> {
    Classifier::new(DdOptions::default()).is_core(g)
}

/// Every degree lies in `3..=5`.
pub fn degree_bounded(g: &Graph) -> bool {
    g.degrees().iter().all(|d| (3..=5).contains(d))
}

/// `2 < d(u) < n - 3` for every vertex off the first 5-hole.
pub fn degree_window_ok(g: &Graph) -> Result<bool, DecisionError> {
    let hole = g.five_holes().into_iter().next().ok_or(DecisionError::NoFiveHole)?;
    Ok(degree_window_ok_for(g, &hole))
}

/// `2 < d(u) < n - 3` for every vertex off `hole`.
pub fn degree_window_ok_for(g: &Graph, hole: &[usize]) -> bool {
    let n = g.order();
    let on: VertexSet = hole.iter().copied().collect();
    g.vertices().difference(on).iter().all(|u| {
        let d = g.degree(u);
        2 < d && d + 3 < n
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_pattern;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn wheel(n: usize) -> Graph {
        let mut g = Graph::empty(n + 1).unwrap();
        for i in 0..n {
            g.add_edge(i, (i + 1) % n).unwrap();
            g.add_edge(i, n).unwrap();
        }
        g
    }

    #[test]
    fn k4_witness() {
        let k4 = Graph::empty(4).unwrap().complement();
        let third = RatVector::constant(4, Rational::new(1, 3));
        let r = is_t_perfect(&k4).unwrap();
        assert!(!r.t_perfect);
        assert_eq!(r.witness, Some(third.clone()));
        let r = is_t_perfect_dd(&k4, &DdOptions::default()).unwrap();
        assert_eq!(r.witness, Some(third));
    }

    #[test]
    fn small_verdicts() {
        assert!(is_t_perfect(&cycle(5)).unwrap().t_perfect);
        assert!(!is_t_perfect(&wheel(5)).unwrap().t_perfect);
        assert!(!is_t_perfect_dd(&wheel(5), &DdOptions::default()).unwrap().t_perfect);
    }

    #[test]
    fn lemma_graph_has_all_thirds_witness() {
        let g = parse_pattern("(12*435*1)").unwrap().realize();
        let r = is_t_perfect(&g).unwrap();
        assert!(!r.t_perfect);
        assert_eq!(r.witness, Some(RatVector::constant(10, Rational::new(1, 3))));
    }

    #[test]
    fn degree_predicates() {
        let k4 = Graph::empty(4).unwrap().complement();
        assert!(degree_bounded(&k4));
        assert!(!degree_bounded(&cycle(5)));
        assert!(degree_bounded(&parse_pattern("(123451)").unwrap().realize()));
        assert!(degree_window_ok(&parse_pattern("(12*435*1)").unwrap().realize()).unwrap());
        assert!(!degree_window_ok(&parse_pattern("(1)").unwrap().realize()).unwrap());
        assert!(!degree_window_ok(&parse_pattern("(1*)").unwrap().realize()).unwrap());
        assert_eq!(degree_window_ok(&k4), Err(DecisionError::NoFiveHole));
    }

    #[test]
    fn minimality_and_core() {
        let k4 = Graph::empty(4).unwrap().complement();
        assert!(is_minimally_t_imperfect(&k4).unwrap());
        assert!(is_minimally_t_imperfect(&cycle(7).complement()).unwrap());
        assert!(!is_minimally_t_imperfect(&cycle(9)).unwrap());
        assert!(is_core(&cycle(7)).unwrap());
        assert!(!is_core(&cycle(9)).unwrap());
        assert!(is_core(&cycle(5)).unwrap());
    }
}
