//! Naming the vertices around a fixed 5-hole and checking the local
//! observations every core graph obeys.
//!
//! An off-hole vertex with exactly the consecutive hole neighbors `v_i`,
//! `v_{i+1}` is `u_{i+3}`. One with exactly the three neighbors `v_i`,
//! `v_{i+1}`, `v_{i+3}` is `u_{i+3}` with a ring. Any other neighborhood
//! on the hole, or two vertices receiving the same index, is a structural
//! violation.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::pattern::{wrap, PatternSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelError {
    #[error("the given vertices do not induce a 5-cycle in that order")]
    NotAFiveHole,
    #[error("vertex {vertex} has hole neighbors {hole_neighbors:?}, neither two consecutive nor three non-consecutive")]
    Neighborhood { vertex: usize, hole_neighbors: Vec<usize> },
    #[error("vertices {first} and {second} both receive index {index}")]
    DuplicateIndex { index: u8, first: usize, second: usize },
}

/// `cycle[i - 1]` is `v_i`; `u[i - 1]` is `u_i` when present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoleLabeling {
    pub cycle: [usize; 5],
    pub u: [Option<usize>; 5],
    rings: u8,
}

impl HoleLabeling {
    pub fn v(&self, i: i32) -> usize {
        self.cycle[wrap(i) as usize - 1]
    }

    pub fn u(&self, i: i32) -> Option<usize> {
        self.u[wrap(i) as usize - 1]
    }

    /// Indices `i` with `u_i v_i` present, ascending.
    pub fn ring_set(&self) -> Vec<u8> {
        (1..=5).filter(|&i| self.rings & (1 << i) != 0).collect()
    }

    pub fn is_ringed(&self, i: i32) -> bool {
        self.rings & (1 << wrap(i)) != 0
    }

    pub fn u_indices(&self) -> Vec<u8> {
        (1..=5).filter(|&i| self.u[i as usize - 1].is_some()).collect()
    }

    /// The pattern this labelling describes in `g`.
    pub fn to_spec(&self, g: &Graph) -> PatternSpec {
        let idx = self.u_indices();
        let mut edges = Vec::new();
        for (k, &a) in idx.iter().enumerate() {
            for &b in &idx[k + 1..] {
                if g.has_edge(self.u(a as i32).unwrap(), self.u(b as i32).unwrap()) {
                    edges.push((a, b));
                }
            }
        }
        PatternSpec::from_parts(idx, edges, self.ring_set()).expect("indices in range")
    }
}

/// Labels `g` around `hole` (taken as `v1 .. v5` in order).
pub fn label_five_hole(g: &Graph, hole: &[usize]) -> Result<HoleLabeling, LabelError> {
    let cycle: [usize; 5] = hole.try_into().map_err(|_| LabelError::NotAFiveHole)?;
    let on: VertexSet = cycle.iter().copied().collect();
    if on.len() != 5 || cycle.iter().any(|&v| v >= g.order()) {
        return Err(LabelError::NotAFiveHole);
    }
    for k in 0..5 {
        let nb = g.neighbors(cycle[k]).intersection(on);
        if nb != VertexSet::from_iter([cycle[(k + 1) % 5], cycle[(k + 4) % 5]]) {
            return Err(LabelError::NotAFiveHole);
        }
    }
    let mut lab = HoleLabeling { cycle, u: [None; 5], rings: 0 };
    for x in g.vertices().difference(on) {
        // positions p (0-based) of hole neighbors: v_{p+1}
        let pos: Vec<usize> = (0..5).filter(|&p| g.has_edge(x, cycle[p])).collect();
        let has = |p: usize| pos.contains(&(p % 5));
        let start = (0..5).find(|&p| has(p) && has(p + 1));
        let (index, ring) = match (pos.len(), start) {
            (2, Some(p)) => (wrap(p as i32 + 1 + 3), false),
            (3, _) => {
                // v_i, v_{i+1}, v_{i+3}: exactly one consecutive pair
                let pairs: Vec<usize> = (0..5).filter(|&p| has(p) && has(p + 1)).collect();
                match pairs.as_slice() {
                    [p] if has(p + 3) => (wrap(*p as i32 + 1 + 3), true),
                    _ => return Err(LabelError::Neighborhood { vertex: x, hole_neighbors: pos.iter().map(|&p| cycle[p]).collect() }),
                }
            }
            _ => return Err(LabelError::Neighborhood { vertex: x, hole_neighbors: pos.iter().map(|&p| cycle[p]).collect() }),
        };
        let slot = &mut lab.u[index as usize - 1];
        if let Some(first) = *slot {
            return Err(LabelError::DuplicateIndex { index, first, second: x });
        }
        *slot = Some(x);
        if ring {
            lab.rings |= 1 << index;
        }
    }
    Ok(lab)
}

/// Display names of the six observations.
pub const OBSERVATIONS: [&str; 6] = ["Obs.1", "Obs.2", "Obs.3", "Obs.4", "Obs.5", "Obs.6"];

struct Ctx<'a> {
    g: &'a Graph,
    lab: &'a HoleLabeling,
    i: i32,
}

impl Ctx<'_> {
    /// `u_{i+a} u_{i+b}` is an edge; false if either end is absent.
    fn uu(&self, a: i32, b: i32) -> bool {
        match (self.lab.u(self.i + a), self.lab.u(self.i + b)) {
            (Some(x), Some(y)) => self.g.has_edge(x, y),
            _ => false,
        }
    }

    /// As a required conclusion: satisfied when an end is absent.
    fn uu_required(&self, a: i32, b: i32) -> bool {
        self.lab.u(self.i + a).is_none() || self.lab.u(self.i + b).is_none() || self.uu(a, b)
    }

    /// `u_{i+a} v_{i+a}` is an edge.
    fn ring(&self, a: i32) -> bool {
        self.lab.u(self.i + a).is_some() && self.lab.is_ringed(self.i + a)
    }
}

fn implies(premise: bool, conclusion: bool) -> bool {
    !premise || conclusion
}

/// Whether observation `obs` (1..=6), with its symmetric form where it has
/// one, holds at rotation `i` (1..=5). Absent `u` vertices make edges to them
/// absent; a required edge to an absent vertex is not demanded.
pub fn check_observation(g: &Graph, lab: &HoleLabeling, obs: u8, i: u8) -> bool {
    let c = Ctx { g, lab, i: i as i32 };
    match obs {
        // u_i v_i and u_{i+1} u_{i+2} force u_i u_{i+1} or u_i u_{i+2}
        1 => {
            implies(c.ring(0) && c.uu(1, 2), c.uu_required(0, 1) || c.uu_required(0, 2))
                && implies(c.ring(0) && c.uu(-1, -2), c.uu_required(0, -2) || c.uu_required(0, -1))
        }
        // u_i u_{i+1} and u_i u_{i+3} force u_i v_i or u_{i+1} u_{i+3}
        2 => {
            implies(c.uu(0, 1) && c.uu(0, 3), c.ring(0) || c.uu_required(1, 3))
                && implies(c.uu(0, -1) && c.uu(0, -3), c.ring(0) || c.uu_required(-1, -3))
        }
        3 => implies(
            c.uu(-2, -1) && c.uu(-1, 1) && c.uu(1, 2) && (c.ring(-1) || c.ring(1)),
            c.uu_required(-1, 2) || c.uu_required(-2, 1) || c.uu_required(-2, 2),
        ),
        4 => implies(
            c.uu(-1, 1) && !c.ring(-1) && !c.ring(1),
            !c.uu(1, 2) && !c.uu(-1, -2) && c.uu_required(0, -1) && c.uu_required(0, 1),
        ),
        5 => implies(!c.uu(0, 1) && (c.uu(0, 3) || c.uu(1, 3)), !(c.ring(0) && c.ring(1))),
        6 => {
            let none = !c.uu(1, 2) && !c.uu(2, -2) && !c.uu(-1, -2);
            let all = c.uu(1, -2) && c.uu(2, -1) && c.uu(1, -1);
            implies(c.ring(1) && none, !all) && implies(c.ring(-1) && none, !all)
        }
        _ => panic!("observation index {obs} outside 1..=6"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_pattern;

    #[test]
    fn wheel_hub_violates() {
        let mut w5 = Graph::empty(6).unwrap();
        for i in 0..5 {
            w5.add_edge(i, (i + 1) % 5).unwrap();
            w5.add_edge(i, 5).unwrap();
        }
        let err = label_five_hole(&w5, &[0, 1, 2, 3, 4]).unwrap_err();
        assert!(matches!(err, LabelError::Neighborhood { vertex: 5, .. }));
    }

    #[test]
    fn path_pattern() {
        let spec = parse_pattern("(1324)").unwrap();
        let g = spec.realize();
        let lab = label_five_hole(&g, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(lab.u_indices(), vec![1, 2, 3, 4]);
        assert!(lab.ring_set().is_empty());
        assert_eq!(lab.to_spec(&g), spec);
    }

    #[test]
    fn plain_hole() {
        let g = PatternSpec::empty().realize();
        let lab = label_five_hole(&g, &[0, 1, 2, 3, 4]).unwrap();
        assert!(lab.u_indices().is_empty());
        for obs in 1..=6 {
            for i in 1..=5 {
                assert!(check_observation(&g, &lab, obs, i));
            }
        }
    }

    #[test]
    fn not_a_hole() {
        let g = PatternSpec::empty().realize();
        assert_eq!(label_five_hole(&g, &[0, 2, 1, 3, 4]), Err(LabelError::NotAFiveHole));
        assert_eq!(label_five_hole(&g, &[0, 1, 2]), Err(LabelError::NotAFiveHole));
    }

    #[test]
    fn ringed_full_cycle_roundtrip() {
        let spec = parse_pattern("(1*2*3*4*5*1*)").unwrap();
        let g = spec.realize();
        let lab = label_five_hole(&g, &spec.hole()).unwrap();
        assert_eq!(lab.ring_set(), vec![1, 2, 3, 4, 5]);
        assert_eq!(lab.to_spec(&g), spec);
    }

    #[test]
    fn duplicate_index() {
        // two vertices on v3 v4
        let mut g = Graph::empty(7).unwrap();
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap();
        }
        for u in [5, 6] {
            g.add_edge(u, 2).unwrap();
            g.add_edge(u, 3).unwrap();
        }
        assert!(matches!(label_five_hole(&g, &[0, 1, 2, 3, 4]), Err(LabelError::DuplicateIndex { index: 1, .. })));
    }

    #[test]
    fn table_cell_violations() {
        // all rings, U-edge u1u2 only: Obs.1 fails at i = 3
        let spec = PatternSpec::from_parts([1, 2, 3], [(1, 2)], [1, 2, 3]).unwrap();
        let g = spec.realize();
        let lab = label_five_hole(&g, &spec.hole()).unwrap();
        assert!(!check_observation(&g, &lab, 1, 3));
        // ring on 2 only, U-edges u1u2 and u1u3: Obs.4 fails at i = 2
        let spec = PatternSpec::from_parts([1, 2, 3], [(1, 2), (1, 3)], [2]).unwrap();
        let g = spec.realize();
        let lab = label_five_hole(&g, &spec.hole()).unwrap();
        assert!(!check_observation(&g, &lab, 4, 2));
    }
}
