//! Canonical labelling by partition refinement and individualization.
//!
//! Each leaf of the search tree is a discrete ordered partition; the graph
//! relabelled along it gives an upper-triangle bitstring. The canonical form
//! is the lexicographically smallest such bitstring. Vertices of a target
//! cell that are twins of one another (same neighbors apart from each other)
//! are interchangeable, so only one of each twin class is branched on.

use std::fmt;

use super::{Graph, VertexSet};

/// Isomorphism invariant: the order followed by the packed upper triangle of
/// the canonically relabelled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

// Upper triangle packed row by row (pairs (i, j), i < j, i ascending then j),
// most significant bit first, in 8 words; 31 vertices need 465 bits.
type Certificate = [u64; 8];

fn certificate(g: &Graph, order: &[usize]) -> Certificate {
    let mut cert = [0u64; 8];
    let mut pos = 0usize;
    let n = order.len();
    for i in 0..n {
        let row = g.adjacency_row(order[i]);
        for &w in &order[i + 1..] {
            if row & (1 << w) != 0 {
                cert[pos / 64] |= 1u64 << (63 - pos % 64);
            }
            pos += 1;
        }
    }
    cert
}

/// Ordered partition of the vertex set into cells.
type Partition = Vec<Vec<usize>>;

/// Splits cells by neighbor counts into each splitter cell until stable.
/// The procedure only looks at counts, so it commutes with relabelling.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    let mut changed = true;
    while changed {
        changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter: VertexSet = cells[s].iter().copied().collect();
            let mut next = Vec::with_capacity(cells.len() + 1);
            let mut split_here = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cell
                    .iter()
                    .map(|&v| (g.neighbors(v).intersection(splitter).len(), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                if keyed[0].0 != keyed[keyed.len() - 1].0 {
                    split_here = true;
                }
            }
            cells = next;
            if split_here {
                changed = true;
            }
            s += 1;
        }
    }
    cells
}

fn individualize(cells: &Partition, cell_idx: usize, v: usize) -> Partition {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for (i, cell) in cells.iter().enumerate() {
        if i == cell_idx {
            out.push(vec![v]);
            out.push(cell.iter().copied().filter(|&w| w != v).collect());
        } else {
            out.push(cell.clone());
        }
    }
    out
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).without(v) == g.neighbors(v).without(u)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Certificate, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Partition) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let cert = certificate(self.g, &order);
            if self.best.as_ref().is_none_or(|(b, _)| cert < *b) {
                self.best = Some((cert, order));
            }
            return;
        };
        let cell = &cells[target];
        let mut reps: Vec<usize> = Vec::new();
        for &v in cell {
            if !reps.iter().any(|&r| are_twins(self.g, r, v)) {
                reps.push(v);
            }
        }
        for v in reps {
            let child = refine(self.g, individualize(&cells, target, v));
            self.descend(child);
        }
    }
}

/// Canonical vertex order: `result[i]` is the original vertex placed at
/// position `i`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut by_degree: Vec<(usize, usize)> = (0..n).map(|v| (g.degree(v), v)).collect();
    by_degree.sort_unstable();
    let mut cells: Partition = Vec::new();
    for (d, v) in by_degree {
        match cells.last_mut() {
            Some(cell) if g.degree(cell[0]) == d => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut search = Search { g, best: None };
    search.descend(refine(g, cells));
    search.best.expect("search reaches at least one leaf").1
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    pack(g, &canonical_labeling(g))
}

fn pack(g: &Graph, order: &[usize]) -> CanonicalForm {
    let n = g.order();
    let cert = certificate(g, order);
    let bits = n * (n - 1) / 2;
    let mut bytes = Vec::with_capacity(1 + bits.div_ceil(8));
    bytes.push(n as u8);
    for b in 0..bits.div_ceil(8) {
        bytes.push((cert[b / 8] >> (56 - 8 * (b % 8))) as u8);
    }
    CanonicalForm(bytes)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && {
            let mut dg = g.degrees();
            let mut dh = h.degrees();
            dg.sort_unstable();
            dh.sort_unstable();
            dg == dh
        }
        && canonical_form(g) == canonical_form(h)
}

/// The canonical labelling together with the relabelled graph and its form.
/// `order[i]` is the vertex of `g` placed at position `i`.
pub struct Canonized {
    pub order: Vec<usize>,
    pub graph: Graph,
    pub form: CanonicalForm,
}

pub fn canonize(g: &Graph) -> Canonized {
    let order = canonical_labeling(g);
    let mut perm = vec![0; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    let form = pack(g, &order);
    Canonized { graph: g.permute(&perm), order, form }
}

impl Graph {
    /// The canonical representative of this graph's isomorphism class.
    pub fn canonical_graph(&self) -> Graph {
        canonize(self).graph
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgeless_and_complete_are_fast_and_distinct() {
        let e = Graph::empty(20).unwrap();
        let k = e.complement();
        assert_ne!(canonical_form(&e), canonical_form(&k));
        assert_eq!(canonical_form(&e).order(), 20);
    }

    #[test]
    fn canonize_is_consistent() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let c = canonize(&g);
        assert_eq!(c.form, canonical_form(&c.graph));
        assert_eq!(c.form, canonical_form(&g));
        for (pos, &v) in c.order.iter().enumerate() {
            assert_eq!(g.degree(v), c.graph.degree(pos));
        }
    }

    #[test]
    fn c5_and_complement() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(is_isomorphic(&c5, &c5.complement()));
        assert_eq!(c5.canonical_graph().canonical_graph(), c5.canonical_graph());
    }

    #[test]
    fn p4_is_not_k1_3() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_isomorphic(&p4, &star));
    }

    #[test]
    fn regular_nonisomorphic_pair() {
        // C6 versus two disjoint triangles: both 2-regular on six vertices
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&c6, &tt));
    }

    #[test]
    fn hex_is_lowercase() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let h = canonical_form(&g).to_hex();
        assert_eq!(h, h.to_lowercase());
        assert!(h.starts_with("03"));
    }
}
