//! Small simple undirected graphs stored as per-vertex neighbor bitsets.
//!
//! Every graph has at most [`MAX_ORDER`] vertices so that a neighbor set fits
//! in one `u32`. Graphs are plain `Copy` values; all operations return new
//! graphs.

mod canon;
mod graph6;
mod structure;

use std::fmt;

use thiserror::Error;

pub use canon::{canonical_form, canonical_labeling, canonize, is_isomorphic, CanonicalForm, Canonized};
pub use graph6::{graph6_decode, graph6_encode, Graph6Error};
pub use structure::OddCycle;

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} outside 1..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("induced subgraph on the empty vertex set")]
    EmptyVertexSet,
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("stray bits above the vertex range in row {0}")]
    StrayBits(usize),
}

/// A set of vertices of a graph with at most [`MAX_ORDER`] vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 32 && self.0 & (1 << v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u32);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_ORDER],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph { n, adj: [0; MAX_ORDER] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor masks, checking every invariant.
    pub fn from_adjacency(rows: &[u32]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(rows.len())?;
        g.adj[..rows.len()].copy_from_slice(rows);
        g.validate()?;
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.n })
        } else {
            Ok(())
        }
    }

    /// Checks symmetry, irreflexivity and that no bit beyond `n - 1` is set.
    pub fn validate(&self) -> Result<(), GraphError> {
        let full = VertexSet::full(self.n).bits();
        for v in 0..MAX_ORDER {
            let row = self.adj[v];
            if v >= self.n {
                if row != 0 {
                    return Err(GraphError::StrayBits(v));
                }
                continue;
            }
            if row & !full != 0 {
                return Err(GraphError::StrayBits(v));
            }
            if row & (1 << v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in VertexSet::from_bits(row) {
                if self.adj[u] & (1 << v) == 0 {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn adjacency_row(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u32 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let mut h = *self;
        for v in 0..self.n {
            h.adj[v] = !self.adj[v] & full & !(1 << v);
        }
        h
    }

    /// The subgraph induced by `s`, relabelled `0..|s|` in ascending order of
    /// the original indices.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        if let Some(v) = s.difference(self.vertices()).first() {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        let members: Vec<usize> = s.iter().collect();
        let mut h = Graph::empty(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            let mut row = 0u32;
            for (j, &w) in members.iter().enumerate() {
                if self.adj[u] & (1 << w) != 0 {
                    row |= 1 << j;
                }
            }
            h.adj[i] = row;
        }
        Ok(h)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        self.induced_subgraph(self.vertices().without(v))
    }

    pub fn delete_vertices(&self, s: VertexSet) -> Result<Graph, GraphError> {
        self.induced_subgraph(self.vertices().difference(s))
    }

    /// Relabels vertex `v` as `perm[v]`.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            assert!(p < self.n && !seen.contains(p), "not a permutation");
            seen.insert(p);
        }
        let mut h = Graph { n: self.n, adj: [0; MAX_ORDER] };
        for (u, &pu) in perm.iter().enumerate() {
            for w in self.neighbors(u) {
                h.adj[pu] |= 1 << perm[w];
            }
        }
        h
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6_encode(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn complement_of_k4_is_edgeless() {
        let k4 = Graph::empty(4).unwrap().complement();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.complement().edge_count(), 0);
    }

    #[test]
    fn complement_of_c5_is_c5() {
        let c = c5();
        assert!(is_isomorphic(&c, &c.complement()));
        assert_eq!(c.complement().complement(), c);
    }

    #[test]
    fn c5_minus_vertex_is_p4() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = c5().delete_vertex(2).unwrap();
        assert_eq!(h.order(), 4);
        assert!(is_isomorphic(&h, &p4));
    }

    #[test]
    fn induced_subgraph_keeps_ascending_order() {
        let g = c5();
        let h = g.induced_subgraph(VertexSet::from_iter([0, 1, 4])).unwrap();
        // 0-1 and 0-4 become 0-1 and 0-2
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn empty_induced_set_is_error() {
        assert_eq!(c5().induced_subgraph(VertexSet::EMPTY), Err(GraphError::EmptyVertexSet));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Graph::empty(0), Err(GraphError::OrderOutOfRange(0))));
        assert!(matches!(Graph::empty(32), Err(GraphError::OrderOutOfRange(32))));
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 3)]).is_err());
        assert_eq!(Graph::from_adjacency(&[0b10, 0]), Err(GraphError::Asymmetric(0, 1)));
        assert_eq!(Graph::from_adjacency(&[0b100, 0]), Err(GraphError::StrayBits(0)));
    }

    #[test]
    fn vertex_set_basics() {
        let s = VertexSet::from_iter([3, 1, 7]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 7]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.first(), Some(1));
        assert!(s.contains(7) && !s.contains(2));
        assert_eq!(VertexSet::full(31).len(), 31);
    }
}
