//! Named graphs and families, plus the transcribed pattern lists and
//! reduction tables that the verification campaigns replay.

mod data;

use thiserror::Error;

pub use data::{
    census_core_counts, checksum_material, figure2_entries, figure2_patterns, figure3_entries, figure3_patterns,
    lemma13_self_complementary, lemma20_isomorphisms, lemma8_isomorphisms, lemma8_named, order6_listed, order7_listed,
    prop10_patterns, prop11_patterns, prop12_patterns, prop7_entries, prop7_patterns, prop9_patterns,
    table1_cells, table1_graph_names, table2_rows, table3_rows, theorem2_isomorphisms, CellClaim, Deletion, Entry,
    IsoClaim, ReductionRow, Table1Cell, GRAPH_COUNTS_BY_ORDER, GRAPH_COUNT_ORDER_10,
};

use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("{family} needs {requirement}, got {value}")]
    OutOfRange { family: &'static str, requirement: &'static str, value: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn need(ok: bool, family: &'static str, requirement: &'static str, value: usize) -> Result<(), GeneratorError> {
    if ok {
        Ok(())
    } else {
        Err(GeneratorError::OutOfRange { family, requirement, value })
    }
}

/// `C_l` on `0..l`, edges `i (i+1 mod l)`.
pub fn cycle(l: usize) -> Result<Graph, GeneratorError> {
    need((3..=MAX_ORDER).contains(&l), "cycle", "3 <= l <= 31", l)?;
    cycle_power(l, 1)
}

/// `P_l`: `l` vertices, `l - 1` edges.
pub fn path(l: usize) -> Result<Graph, GeneratorError> {
    need((1..=MAX_ORDER).contains(&l), "path", "1 <= l <= 31", l)?;
    let e: Vec<_> = (1..l).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges(l, &e)?)
}

pub fn complete(l: usize) -> Result<Graph, GeneratorError> {
    need((1..=MAX_ORDER).contains(&l), "complete", "1 <= l <= 31", l)?;
    Ok(Graph::empty(l)?.complement())
}

/// `W_l`: `C_l` on `0..l` and the hub `l` joined to all of it.
pub fn wheel(l: usize) -> Result<Graph, GeneratorError> {
    need((3..MAX_ORDER).contains(&l), "wheel", "3 <= l <= 30", l)?;
    let mut g = Graph::empty(l + 1)?;
    for i in 0..l {
        g.add_edge(i, (i + 1) % l)?;
        g.add_edge(i, l)?;
    }
    Ok(g)
}

/// `C_l^k`: `i j` is an edge iff the circular distance is at most `k`.
pub fn cycle_power(l: usize, k: usize) -> Result<Graph, GeneratorError> {
    need((3..=MAX_ORDER).contains(&l), "cycle_power", "3 <= l <= 31", l)?;
    need(k >= 1, "cycle_power", "k >= 1", k)?;
    let mut g = Graph::empty(l)?;
    for i in 0..l {
        for j in i + 1..l {
            if (j - i).min(l - (j - i)) <= k {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// The even Möbius ladder on `2k` rungs: the complement of `C_{4k}^{2k-2}`.
pub fn mobius_ladder(two_k: usize) -> Result<Graph, GeneratorError> {
    need(two_k >= 4 && two_k.is_multiple_of(2), "mobius_ladder", "an even number >= 4", two_k)?;
    let k = two_k / 2;
    Ok(cycle_power(4 * k, 2 * k - 2)?.complement())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn basic_shapes() {
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        assert_eq!(path(2).unwrap().edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(path(1).unwrap().edge_count(), 0);
        let c5 = cycle(5).unwrap();
        assert!(c5.degrees().iter().all(|&d| d == 2));
        assert_eq!(c5.edge_count(), 5);
    }

    #[test]
    fn wheels() {
        assert!(is_isomorphic(&wheel(3).unwrap(), &complete(4).unwrap()));
        let w5 = wheel(5).unwrap();
        assert_eq!((w5.order(), w5.edge_count()), (6, 10));
        let w7 = wheel(7).unwrap();
        assert_eq!(w7.order(), 8);
        assert_eq!(w7.degree(7), 7);
    }

    #[test]
    fn powers() {
        assert!(is_isomorphic(&cycle_power(5, 2).unwrap(), &complete(5).unwrap()));
        for l in 3..12 {
            assert_eq!(cycle_power(l, 1).unwrap(), cycle(l).unwrap());
        }
    }

    #[test]
    fn mobius() {
        let m4 = mobius_ladder(4).unwrap();
        assert_eq!(m4, cycle_power(8, 2).unwrap().complement());
        assert_eq!(m4.degrees(), vec![3; 8]);
        assert_eq!(mobius_ladder(6).unwrap().order(), 12);
    }

    #[test]
    fn range_errors() {
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(complete(0).is_err());
        assert!(wheel(2).is_err());
        assert!(cycle_power(8, 0).is_err());
        assert!(mobius_ladder(5).is_err());
        assert!(mobius_ladder(2).is_err());
        assert!(cycle(40).is_err());
    }
}
