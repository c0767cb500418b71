use std::collections::HashSet;
use std::fmt;

use super::DecisionError;
use crate::graph::Graph;

/// Contracts `v` together with its independent neighborhood into one vertex.
///
/// The merged vertex keeps `v`'s position among the survivors, which stay in
/// ascending order, and is adjacent to every survivor with a neighbor in
/// `N(v)`.
pub fn t_contract(g: &Graph, v: usize) -> Result<Graph, DecisionError> {
    if v >= g.order() {
        return Err(crate::graph::GraphError::VertexOutOfRange { vertex: v, order: g.order() }.into());
    }
    let nv = g.neighbors(v);
    if nv.is_empty() {
        return Err(DecisionError::EmptyNeighborhood(v));
    }
    if !g.is_independent(nv) {
        return Err(DecisionError::NeighborhoodNotIndependent(v));
    }
    let mut h = *g;
    let survivors = g.vertices().difference(nv);
    for w in survivors.without(v) {
        if !g.neighbors(w).intersection(nv).is_empty() {
            h.add_edge(v, w)?;
        }
    }
    Ok(h.induced_subgraph(survivors)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinorOp {
    Delete(usize),
    Contract(usize),
}

impl fmt::Display for MinorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorOp::Delete(v) => write!(f, "delete {v}"),
            MinorOp::Contract(v) => write!(f, "contract {v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TMinor {
    pub op: MinorOp,
    pub graph: Graph,
}

/// Vertex deletions and t-contractions, one of each isomorphism class, in
/// the order deletions first then contractions, by vertex.
pub fn one_step_t_minors(g: &Graph) -> Vec<TMinor> {
    let n = g.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    if n > 1 {
        for v in 0..n {
            let h = g.delete_vertex(v).expect("n > 1");
            if seen.insert(h.canonical_form()) {
                out.push(TMinor { op: MinorOp::Delete(v), graph: h });
            }
        }
    }
    for v in 0..n {
        if let Ok(h) = t_contract(g, v) {
            if seen.insert(h.canonical_form()) {
                out.push(TMinor { op: MinorOp::Contract(v), graph: h });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn c5_contracts_to_triangle() {
        let k3 = Graph::empty(3).unwrap().complement();
        for v in 0..5 {
            assert!(is_isomorphic(&t_contract(&cycle(5), v).unwrap(), &k3));
        }
    }

    #[test]
    fn star_center_contracts_to_a_point() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let h = t_contract(&star, 0).unwrap();
        assert_eq!(h.order(), 1);
    }

    #[test]
    fn merged_vertex_keeps_its_slot() {
        // path 0-1-2-3-4 contracted at 2: survivors 0, 2, 4 with 2 merged
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let h = t_contract(&p5, 2).unwrap();
        assert_eq!(h, Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn errors() {
        let mut w5 = Graph::empty(6).unwrap();
        for i in 0..5 {
            w5.add_edge(i, (i + 1) % 5).unwrap();
            w5.add_edge(i, 5).unwrap();
        }
        assert_eq!(t_contract(&w5, 0), Err(DecisionError::NeighborhoodNotIndependent(0)));
        let e = Graph::empty(2).unwrap();
        assert_eq!(t_contract(&e, 1), Err(DecisionError::EmptyNeighborhood(1)));
    }

    #[test]
    fn minor_counts() {
        let k4 = Graph::empty(4).unwrap().complement();
        assert_eq!(one_step_t_minors(&k4).len(), 1);
        let c5 = one_step_t_minors(&cycle(5));
        assert_eq!(c5.len(), 2);
        assert_eq!(c5[0].op, MinorOp::Delete(0));
        assert_eq!(c5[1].op, MinorOp::Contract(0));
    }
}
