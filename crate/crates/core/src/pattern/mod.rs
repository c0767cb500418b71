//! Graphs built around a fixed 5-hole `v1 .. v5`.
//!
//! Each extra vertex `u_i` (`i` in `1..=5`) is adjacent to `v_{i+2}` and
//! `v_{i+3}`, indices mod 5 with residue 0 read as 5. A ring on `i` adds
//! `u_i v_i`. Text form: `(1*324*)` is the path `u1 u3 u2 u4` with rings on
//! 1 and 4; `|` separates components; a component whose last digit repeats
//! its first is a cycle. U-graphs that are not unions of paths and cycles are
//! written `{1*234:12,13,14}` (index tokens, then the U-edges).

mod enumerate;
mod parse;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use enumerate::{enumerate_pattern_graphs, PatternSpace};
pub use parse::{parse_pattern, PatternExpr};

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("character {ch:?} at offset {offset} is not an index in 1..=5")]
    DigitOutOfRange { ch: char, offset: usize },
    #[error("unexpected character {ch:?} at offset {offset}")]
    Unexpected { ch: char, offset: usize },
    #[error("index {0} repeats inside a component other than as a cycle closure")]
    IllegalRepetition(u8),
    #[error("index {0} appears in more than one component")]
    DuplicateAcrossComponents(u8),
    #[error("empty component")]
    EmptyComponent,
    #[error("cycle through {0:?} has fewer than three indices")]
    ShortCycle(Vec<u8>),
    #[error("edge {0}{1} uses an index not listed")]
    UnknownEdgeEnd(u8, u8),
    #[error("unbalanced parentheses")]
    Unbalanced,
    #[error("unknown vertex name {0:?}")]
    UnknownVertex(String),
}

/// A vertex of a realized pattern graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexName {
    V(u8),
    U(u8),
}

impl fmt::Display for VertexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexName::V(i) => write!(f, "v{i}"),
            VertexName::U(i) => write!(f, "u{i}"),
        }
    }
}

impl std::str::FromStr for VertexName {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PatternError::UnknownVertex(s.to_string());
        let s = s.trim();
        let (kind, digit) = s.split_at_checked(1).ok_or_else(bad)?;
        let i: u8 = digit.parse().map_err(|_| bad())?;
        if !(1..=5).contains(&i) {
            return Err(bad());
        }
        match kind {
            "v" => Ok(VertexName::V(i)),
            "u" => Ok(VertexName::U(i)),
            _ => Err(bad()),
        }
    }
}

/// `i` reduced into `1..=5`.
pub fn wrap(i: i32) -> u8 {
    (i - 1).rem_euclid(5) as u8 + 1
}

/// The two hole neighbors `v_{i+2}` and `v_{i+3}` of `u_i`.
pub fn spokes(i: u8) -> [u8; 2] {
    [wrap(i as i32 + 2), wrap(i as i32 + 3)]
}

fn mask(i: u8) -> u8 {
    1 << i
}

/// The potential-edge data of a pattern graph: which `u_i` exist, which
/// pairs of them are adjacent, and which carry a ring.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternSpec {
    indices: u8,
    edges: BTreeSet<(u8, u8)>,
    rings: u8,
}

impl PatternSpec {
    /// The plain 5-hole.
    pub fn empty() -> Self {
        PatternSpec { indices: 0, edges: BTreeSet::new(), rings: 0 }
    }

    pub fn from_parts(
        indices: impl IntoIterator<Item = u8>,
        edges: impl IntoIterator<Item = (u8, u8)>,
        rings: impl IntoIterator<Item = u8>,
    ) -> Result<Self, PatternError> {
        let mut spec = PatternSpec::empty();
        for i in indices {
            if !(1..=5).contains(&i) {
                return Err(PatternError::DigitOutOfRange { ch: (b'0' + i) as char, offset: 0 });
            }
            spec.indices |= mask(i);
        }
        for (a, b) in edges {
            if !spec.has_index(a) || !spec.has_index(b) || a == b {
                return Err(PatternError::UnknownEdgeEnd(a, b));
            }
            spec.edges.insert((a.min(b), a.max(b)));
        }
        for r in rings {
            if !spec.has_index(r) {
                return Err(PatternError::UnknownEdgeEnd(r, r));
            }
            spec.rings |= mask(r);
        }
        Ok(spec)
    }

    pub fn has_index(&self, i: u8) -> bool {
        (1..=5).contains(&i) && self.indices & mask(i) != 0
    }

    /// Indices of the `u` vertices, ascending.
    pub fn u_indices(&self) -> Vec<u8> {
        (1..=5).filter(|&i| self.has_index(i)).collect()
    }

    pub fn u_edges(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_u_edge(&self, a: u8, b: u8) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn ring_set(&self) -> Vec<u8> {
        (1..=5).filter(|&i| self.is_ringed(i)).collect()
    }

    pub fn is_ringed(&self, i: u8) -> bool {
        (1..=5).contains(&i) && self.rings & mask(i) != 0
    }

    pub fn order(&self) -> usize {
        5 + self.indices.count_ones() as usize
    }

    fn u_neighbors(&self, i: u8) -> Vec<u8> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| if a == i { Some(b) } else if b == i { Some(a) } else { None })
            .collect()
    }

    /// Components in canonical order, each a path or a closed cycle (last
    /// index equal to the first); `None` if some component is neither.
    pub fn components(&self) -> Option<Vec<Vec<u8>>> {
        let mut seen = 0u8;
        let mut out = Vec::new();
        for start in self.u_indices() {
            if seen & mask(start) != 0 {
                continue;
            }
            let mut comp = vec![start];
            let mut k = 0;
            seen |= mask(start);
            while k < comp.len() {
                for w in self.u_neighbors(comp[k]) {
                    if seen & mask(w) == 0 {
                        seen |= mask(w);
                        comp.push(w);
                    }
                }
                k += 1;
            }
            let degs: Vec<usize> = comp.iter().map(|&i| self.u_neighbors(i).len()).collect();
            if degs.iter().any(|&d| d > 2) {
                return None;
            }
            let edges = degs.iter().sum::<usize>() / 2;
            let min = *comp.iter().min().unwrap();
            let walk = |first: u8, second: Option<u8>| {
                let mut seq = vec![first];
                let mut prev = first;
                let mut cur = second;
                while let Some(c) = cur {
                    seq.push(c);
                    if c == first {
                        break;
                    }
                    let next = self.u_neighbors(c).into_iter().find(|&w| w != prev);
                    prev = c;
                    cur = next;
                }
                seq
            };
            if edges == comp.len() {
                // cycle: smallest index first, then its smaller neighbor
                let second = *self.u_neighbors(min).iter().min().unwrap();
                out.push(walk(min, Some(second)));
            } else {
                let end = *comp.iter().filter(|&&i| self.u_neighbors(i).len() <= 1).min().unwrap();
                out.push(walk(end, self.u_neighbors(end).first().copied()));
            }
        }
        out.sort_by_key(|c| *c.iter().min().unwrap());
        Some(out)
    }

    /// Graph vertex of a name: `v1..v5` are `0..4`, then the `u` vertices in
    /// ascending index order.
    pub fn vertex(&self, name: VertexName) -> Option<usize> {
        match name {
            VertexName::V(i) if (1..=5).contains(&i) => Some(i as usize - 1),
            VertexName::U(i) if self.has_index(i) => {
                Some(5 + (self.indices & (mask(i) - 1)).count_ones() as usize)
            }
            _ => None,
        }
    }

    pub fn vertex_names(&self) -> Vec<VertexName> {
        (1..=5).map(VertexName::V).chain(self.u_indices().into_iter().map(VertexName::U)).collect()
    }

    pub fn realize(&self) -> Graph {
        let mut g = Graph::empty(self.order()).expect("at most ten vertices");
        let v = |i: u8| i as usize - 1;
        for i in 1..=5u8 {
            g.add_edge(v(i), v(wrap(i as i32 + 1))).expect("in range");
        }
        for i in self.u_indices() {
            let u = self.vertex(VertexName::U(i)).unwrap();
            for s in spokes(i) {
                g.add_edge(u, v(s)).expect("in range");
            }
            if self.is_ringed(i) {
                g.add_edge(u, v(i)).expect("in range");
            }
        }
        for &(a, b) in &self.edges {
            let ua = self.vertex(VertexName::U(a)).unwrap();
            let ub = self.vertex(VertexName::U(b)).unwrap();
            g.add_edge(ua, ub).expect("in range");
        }
        g
    }

    /// Vertices of the fixed hole in cyclic order.
    pub fn hole(&self) -> [usize; 5] {
        [0, 1, 2, 3, 4]
    }

    pub fn u_vertices(&self) -> VertexSet {
        VertexSet::full(self.order()).difference(VertexSet::full(5))
    }

    fn token(&self, i: u8, closing: bool) -> String {
        if self.is_ringed(i) && !closing {
            format!("{i}*")
        } else {
            i.to_string()
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.components() {
            Some(comps) => {
                f.write_str("(")?;
                for (k, comp) in comps.iter().enumerate() {
                    if k > 0 {
                        f.write_str("|")?;
                    }
                    for (j, &i) in comp.iter().enumerate() {
                        f.write_str(&self.token(i, j > 0 && j + 1 == comp.len() && i == comp[0]))?;
                    }
                }
                f.write_str(")")
            }
            None => {
                f.write_str("{")?;
                for i in self.u_indices() {
                    f.write_str(&self.token(i, false))?;
                }
                f.write_str(":")?;
                let edges: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}{b}")).collect();
                f.write_str(&edges.join(","))?;
                f.write_str("}")
            }
        }
    }
}

impl fmt::Debug for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternSpec{self}")
    }
}

/// Canonical text of a spec.
pub fn format_pattern(spec: &PatternSpec) -> String {
    spec.to_string()
}

pub fn realize_pattern(spec: &PatternSpec) -> Graph {
    spec.realize()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spoke_indices() {
        assert_eq!(spokes(1), [3, 4]);
        assert_eq!(spokes(3), [5, 1]);
        assert_eq!(spokes(4), [1, 2]);
        assert_eq!(wrap(0), 5);
        assert_eq!(wrap(-1), 4);
        assert_eq!(wrap(7), 2);
    }

    #[test]
    fn realize_single_u() {
        let g = parse_pattern("(1)").unwrap().realize();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.neighbors(5), VertexSet::from_iter([2, 3]));
    }

    #[test]
    fn realize_full_cycle() {
        let g = parse_pattern("(123451)").unwrap().realize();
        assert_eq!(g.order(), 10);
        assert_eq!(g.edge_count(), 20);
        assert_eq!(g.independence_number(), 3);
        assert!(g.degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn vertex_names() {
        let spec = parse_pattern("(24)").unwrap();
        assert_eq!(spec.vertex(VertexName::U(4)), Some(6));
        assert_eq!(spec.vertex(VertexName::U(1)), None);
        assert_eq!(spec.vertex("v5".parse().unwrap()), Some(4));
        assert_eq!(spec.vertex_names().len(), 7);
    }

    #[test]
    fn explicit_form_for_a_claw() {
        let spec = PatternSpec::from_parts([1, 2, 3, 4], [(1, 2), (1, 3), (1, 4)], [1]).unwrap();
        assert!(spec.components().is_none());
        assert_eq!(spec.to_string(), "{1*234:12,13,14}");
        assert_eq!(parse_pattern("{1*234:12,13,14}").unwrap(), spec);
    }
}
