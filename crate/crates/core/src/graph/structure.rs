//! Structural predicates: cliques, independent sets, chordless odd cycles,
//! perfection, bipartiteness, clique separators and partitionability.

use super::{Graph, VertexSet};

/// A chordless odd cycle as a vertex list in cyclic order, rotated so the
/// smallest vertex comes first and oriented so its smaller neighbor is second.
pub type OddCycle = Vec<usize>;

impl Graph {
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).intersection(s).is_empty())
    }

    pub fn clique_number(&self) -> usize {
        let mut best = 0;
        max_clique(self, VertexSet::EMPTY, self.vertices(), &mut best);
        best
    }

    pub fn independence_number(&self) -> usize {
        self.complement().clique_number()
    }

    /// A maximum clique, smallest-first among ties found by the search.
    pub fn maximum_clique(&self) -> VertexSet {
        let mut best = VertexSet::EMPTY;
        max_clique_set(self, VertexSet::EMPTY, self.vertices(), &mut best);
        best
    }

    /// Some clique of order `k`, if one exists.
    pub fn find_clique(&self, k: usize) -> Option<VertexSet> {
        fn go(g: &Graph, cur: VertexSet, cand: VertexSet, k: usize) -> Option<VertexSet> {
            if cur.len() == k {
                return Some(cur);
            }
            if cur.len() + cand.len() < k {
                return None;
            }
            let mut rest = cand;
            for v in cand {
                rest.remove(v);
                if let Some(c) = go(g, cur.with(v), rest.intersection(g.neighbors(v)), k) {
                    return Some(c);
                }
            }
            None
        }
        go(self, VertexSet::EMPTY, self.vertices(), k)
    }

    /// Calls `f` once for every nonempty clique.
    pub fn for_each_clique<F: FnMut(VertexSet) -> bool>(&self, mut f: F) {
        fn go<F: FnMut(VertexSet) -> bool>(
            g: &Graph,
            cur: VertexSet,
            cand: VertexSet,
            f: &mut F,
        ) -> bool {
            let mut rest = cand;
            for v in cand {
                rest.remove(v);
                let next = cur.with(v);
                if !f(next) {
                    return false;
                }
                if !go(g, next, rest.intersection(g.neighbors(v)), f) {
                    return false;
                }
            }
            true
        }
        go(self, VertexSet::EMPTY, self.vertices(), &mut f);
    }

    /// Every independent set, the empty set included, each exactly once.
    pub fn enumerate_independent_sets(&self) -> Vec<VertexSet> {
        fn go(g: &Graph, cur: VertexSet, cand: VertexSet, out: &mut Vec<VertexSet>) {
            out.push(cur);
            let mut rest = cand;
            for v in cand {
                rest.remove(v);
                go(g, cur.with(v), rest.difference(g.neighbors(v)), out);
            }
        }
        let mut out = Vec::new();
        go(self, VertexSet::EMPTY, self.vertices(), &mut out);
        out
    }

    /// Every chordless cycle of odd length (triangles included).
    ///
    /// Cycles are ordered by length, then lexicographically.
    pub fn enumerate_induced_odd_cycles(&self) -> Vec<OddCycle> {
        let mut out = Vec::new();
        self.chordless_cycles(3, &mut |c| {
            if c.len() % 2 == 1 {
                out.push(c.to_vec());
            }
            true
        });
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Induced odd cycles of length at least five.
    pub fn find_odd_holes(&self) -> Vec<OddCycle> {
        let mut out = Vec::new();
        self.chordless_cycles(5, &mut |c| {
            if c.len() % 2 == 1 {
                out.push(c.to_vec());
            }
            true
        });
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Induced 5-cycles in canonical rotation, lexicographically ordered.
    pub fn five_holes(&self) -> Vec<OddCycle> {
        self.find_odd_holes().into_iter().filter(|c| c.len() == 5).collect()
    }

    pub fn has_odd_hole(&self) -> bool {
        let mut found = false;
        self.chordless_cycles(5, &mut |c| {
            found = c.len() % 2 == 1;
            !found
        });
        found
    }

    /// Walks chordless paths from each start vertex `s` through vertices
    /// larger than `s`; each chordless cycle of length `>= min_len` is
    /// reported once, in canonical rotation. `visit` returns `false` to stop.
    fn chordless_cycles(&self, min_len: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
        fn extend(
            g: &Graph,
            path: &mut Vec<usize>,
            interior: VertexSet,
            higher: VertexSet,
            min_len: usize,
            visit: &mut dyn FnMut(&[usize]) -> bool,
        ) -> bool {
            let s = path[0];
            let last = *path.last().unwrap();
            let on_path: VertexSet = path.iter().copied().collect();
            // `interior` = path vertices strictly between s and last
            let blocked = interior.iter().fold(on_path, |acc, x| acc.union(g.neighbors(x)));
            let cand = g.neighbors(last).intersection(higher).difference(blocked);
            for y in cand {
                if g.has_edge(y, s) {
                    // closes the cycle; keep only the orientation with path[1] < y
                    if path[1] < y {
                        path.push(y);
                        let keep_going = path.len() < min_len || visit(path);
                        path.pop();
                        if !keep_going {
                            return false;
                        }
                    }
                } else {
                    path.push(y);
                    let ok = extend(g, path, interior.with(last), higher, min_len, visit);
                    path.pop();
                    if !ok {
                        return false;
                    }
                }
            }
            true
        }
        let mut path = Vec::with_capacity(self.n);
        for s in 0..self.n {
            let higher = VertexSet::from_bits(!((2u32 << s).wrapping_sub(1))).intersection(self.vertices());
            path.clear();
            path.push(s);
            for x in self.neighbors(s).intersection(higher) {
                path.push(x);
                let ok = extend(self, &mut path, VertexSet::EMPTY, higher, min_len, visit);
                path.pop();
                if !ok {
                    return;
                }
            }
        }
    }

    /// No odd hole in the graph or its complement.
    pub fn is_perfect(&self) -> bool {
        !self.has_odd_hole() && !self.complement().has_odd_hole()
    }

    pub fn is_bipartite(&self) -> bool {
        self.is_bipartite_within(self.vertices())
    }

    pub fn is_bipartite_within(&self, s: VertexSet) -> bool {
        let mut unseen = s;
        while let Some(root) = unseen.first() {
            let mut side = [VertexSet::singleton(root), VertexSet::EMPTY];
            let mut frontier = VertexSet::singleton(root);
            unseen.remove(root);
            let mut parity = 0;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    let nb = self.neighbors(v).intersection(s);
                    if !nb.intersection(side[parity]).is_empty() {
                        return false;
                    }
                    next = next.union(nb.intersection(unseen));
                }
                parity ^= 1;
                side[parity] = side[parity].union(next);
                unseen = unseen.difference(next);
                frontier = next;
            }
        }
        true
    }

    /// Some vertex whose deletion leaves a bipartite graph; bipartite graphs
    /// count as almost bipartite.
    pub fn is_almost_bipartite(&self) -> bool {
        self.bipartizing_vertex().is_some() || self.is_bipartite()
    }

    pub fn bipartizing_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.is_bipartite_within(self.vertices().without(v)))
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Whether `G[s]` is connected; the empty set counts as connected.
    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        let Some(root) = s.first() else { return true };
        let mut seen = VertexSet::singleton(root);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.neighbors(v));
            }
            frontier = next.intersection(s).difference(seen);
            seen = seen.union(frontier);
        }
        seen == s
    }

    /// A clique whose removal disconnects the graph. A disconnected graph
    /// yields the empty clique.
    pub fn clique_separator(&self) -> Option<VertexSet> {
        if !self.is_connected() {
            return Some(VertexSet::EMPTY);
        }
        let all = self.vertices();
        let mut found = None;
        self.for_each_clique(|k| {
            let rest = all.difference(k);
            if rest.len() >= 2 && !self.is_connected_within(rest) {
                found = Some(k);
                false
            } else {
                true
            }
        });
        found
    }

    pub fn has_clique_separator(&self) -> bool {
        self.clique_separator().is_some()
    }

    /// `n = pq + 1` and for every `v`, `V - v` splits into `q` independent
    /// sets of order `p` and into `p` cliques of order `q`.
    pub fn is_pq_partitionable(&self, p: usize, q: usize) -> bool {
        if p < 2 || q < 2 || self.n != p * q + 1 {
            return false;
        }
        let co = self.complement();
        (0..self.n).all(|v| {
            let rest = self.vertices().without(v);
            partition_into_cliques(&co, rest, p) && partition_into_cliques(self, rest, q)
        })
    }
}

fn max_clique(g: &Graph, cur: VertexSet, cand: VertexSet, best: &mut usize) {
    if cand.is_empty() {
        *best = (*best).max(cur.len());
        return;
    }
    let mut rest = cand;
    for v in cand {
        if cur.len() + rest.len() <= *best {
            return;
        }
        rest.remove(v);
        max_clique(g, cur.with(v), rest.intersection(g.neighbors(v)), best);
    }
}

fn max_clique_set(g: &Graph, cur: VertexSet, cand: VertexSet, best: &mut VertexSet) {
    if cand.is_empty() {
        if cur.len() > best.len() {
            *best = cur;
        }
        return;
    }
    let mut rest = cand;
    for v in cand {
        if cur.len() + rest.len() <= best.len() {
            return;
        }
        rest.remove(v);
        max_clique_set(g, cur.with(v), rest.intersection(g.neighbors(v)), best);
    }
}

/// Exact cover of `s` by cliques of order `size`.
fn partition_into_cliques(g: &Graph, s: VertexSet, size: usize) -> bool {
    fn cover(g: &Graph, s: VertexSet, size: usize) -> bool {
        let Some(v) = s.first() else { return true };
        if !s.len().is_multiple_of(size) {
            return false;
        }
        pick(g, s, size, VertexSet::singleton(v), g.neighbors(v).intersection(s))
    }
    fn pick(g: &Graph, s: VertexSet, size: usize, cur: VertexSet, cand: VertexSet) -> bool {
        if cur.len() == size {
            return cover(g, s.difference(cur), size);
        }
        if cur.len() + cand.len() < size {
            return false;
        }
        let mut rest = cand;
        for w in cand {
            rest.remove(w);
            if pick(g, s, size, cur.with(w), rest.intersection(g.neighbors(w))) {
                return true;
            }
        }
        false
    }
    cover(g, s, size)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::empty(n).unwrap().complement()
    }

    #[test]
    fn independence_and_clique_numbers() {
        assert_eq!(cycle(5).independence_number(), 2);
        assert_eq!(complete(4).clique_number(), 4);
        assert_eq!(cycle(7).clique_number(), 2);
        assert_eq!(Graph::empty(6).unwrap().independence_number(), 6);
    }

    #[test]
    fn independent_set_counts() {
        assert_eq!(complete(3).enumerate_independent_sets().len(), 4);
        assert_eq!(cycle(5).enumerate_independent_sets().len(), 11);
        assert_eq!(Graph::empty(3).unwrap().enumerate_independent_sets().len(), 8);
    }

    #[test]
    fn odd_cycles_of_k4_and_c5() {
        let k4 = complete(4).enumerate_induced_odd_cycles();
        assert_eq!(k4, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
        assert_eq!(cycle(5).enumerate_induced_odd_cycles(), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn canonical_rotation() {
        // 5-cycle laid out as 3-0-4-1-2-3
        let g = Graph::from_edges(5, &[(3, 0), (0, 4), (4, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.find_odd_holes(), vec![vec![0, 3, 2, 1, 4]]);
    }

    #[test]
    fn odd_holes() {
        assert_eq!(cycle(5).find_odd_holes().len(), 1);
        assert!(cycle(6).find_odd_holes().is_empty());
        let c7 = cycle(7).find_odd_holes();
        assert_eq!(c7.len(), 1);
        assert_eq!(c7[0].len(), 7);
    }

    #[test]
    fn perfection() {
        assert!(!cycle(5).is_perfect());
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p4.is_perfect());
        assert!(!cycle(7).complement().is_perfect());
        assert!(Graph::empty(1).unwrap().is_perfect());
    }

    #[test]
    fn bipartite_and_almost() {
        assert!(!cycle(5).is_bipartite());
        assert!(cycle(5).is_almost_bipartite());
        assert!(cycle(6).is_bipartite());
        assert!(!complete(4).is_almost_bipartite());
        assert!(Graph::empty(1).unwrap().is_bipartite());
    }

    #[test]
    fn clique_separators() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.clique_separator(), Some(VertexSet::singleton(1)));
        assert!(!cycle(5).has_clique_separator());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.clique_separator(), Some(VertexSet::EMPTY));
        assert!(!complete(4).has_clique_separator());
    }

    #[test]
    fn partitionable() {
        assert!(cycle(5).is_pq_partitionable(2, 2));
        assert!(!complete(4).is_pq_partitionable(3, 3));
        assert!(!cycle(7).is_pq_partitionable(2, 3));
        assert!(cycle(7).complement().is_pq_partitionable(2, 3));
    }
}
