use std::fmt;

use num_integer::Integer;

use super::{PolytopeError, Rational, RatVector};
use crate::graph::{Graph, VertexSet};

/// Where an inequality row came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RowTag {
    /// `-x_v <= 0`
    NonNeg(usize),
    /// `x_v <= 1`
    Upper(usize),
    /// `x_u + x_v <= 1`
    Edge(usize, usize),
    /// `x(C) <= (|C| - 1) / 2`
    OddCycle(Vec<usize>),
    /// `x(K) <= 1`
    Clique(VertexSet),
    Other,
}

/// `coeffs · x <= rhs` with integer data whose overall gcd is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearInequality {
    coeffs: Vec<i64>,
    rhs: i64,
    tag: RowTag,
}

impl LinearInequality {
    pub fn new(coeffs: Vec<i64>, rhs: i64, tag: RowTag) -> Self {
        let g = coeffs.iter().fold(rhs.abs(), |g, &c| g.gcd(&c.abs()));
        let (coeffs, rhs) = if g > 1 {
            (coeffs.iter().map(|c| c / g).collect(), rhs / g)
        } else {
            (coeffs, rhs)
        };
        LinearInequality { coeffs, rhs, tag }
    }

    /// `sum_{v in support} x_v <= rhs`.
    pub fn sum_at_most(dim: usize, support: impl IntoIterator<Item = usize>, rhs: i64, tag: RowTag) -> Self {
        let mut coeffs = vec![0; dim];
        for v in support {
            coeffs[v] = 1;
        }
        Self::new(coeffs, rhs, tag)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn rhs(&self) -> i64 {
        self.rhs
    }

    pub fn tag(&self) -> &RowTag {
        &self.tag
    }

    pub fn lhs(&self, x: &RatVector) -> Rational {
        self.coeffs
            .iter()
            .zip(x.iter())
            .filter(|(c, _)| **c != 0)
            .map(|(&c, xi)| &Rational::integer(c) * xi)
            .sum()
    }

    pub fn is_satisfied_by(&self, x: &RatVector) -> bool {
        self.lhs(x) <= Rational::integer(self.rhs)
    }

    pub fn is_tight_at(&self, x: &RatVector) -> bool {
        self.lhs(x) == Rational::integer(self.rhs)
    }

    /// `Some(v)` for the row `-x_v <= 0`.
    pub(crate) fn as_nonneg(&self) -> Option<usize> {
        self.as_unit(-1, 0)
    }

    /// `Some(v)` for the row `x_v <= 1`.
    pub(crate) fn as_upper(&self) -> Option<usize> {
        self.as_unit(1, 1)
    }

    fn as_unit(&self, sign: i64, rhs: i64) -> Option<usize> {
        if self.rhs != rhs {
            return None;
        }
        let mut hit = None;
        for (i, &c) in self.coeffs.iter().enumerate() {
            match c {
                0 => {}
                c if c == sign && hit.is_none() => hit = Some(i),
                _ => return None,
            }
        }
        hit
    }
}

impl fmt::Display for LinearInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if !first {
                f.write_str(" ")?;
            }
            if mag == 1 {
                write!(f, "{sign}x{i}")?;
            } else {
                write!(f, "{sign}{mag}x{i}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " <= {}", self.rhs)
    }
}

/// A polyhedron `{x : A x <= b}` given by its rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    dim: usize,
    rows: Vec<LinearInequality>,
}

impl HPolytope {
    pub fn new(dim: usize, rows: Vec<LinearInequality>) -> Result<Self, PolytopeError> {
        if let Some(bad) = rows.iter().find(|r| r.coeffs.len() != dim) {
            return Err(PolytopeError::DimensionMismatch { expected: dim, found: bad.coeffs.len() });
        }
        Ok(HPolytope { dim, rows })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[LinearInequality] {
        &self.rows
    }

    pub fn push(&mut self, row: LinearInequality) -> Result<(), PolytopeError> {
        if row.coeffs.len() != self.dim {
            return Err(PolytopeError::DimensionMismatch { expected: self.dim, found: row.coeffs.len() });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn contains_point(&self, x: &RatVector) -> Result<bool, PolytopeError> {
        if x.len() != self.dim {
            return Err(PolytopeError::DimensionMismatch { expected: self.dim, found: x.len() });
        }
        Ok(self.rows.iter().all(|r| r.is_satisfied_by(x)))
    }

    /// Indices of the rows tight at `x`.
    pub fn tight_rows(&self, x: &RatVector) -> Vec<usize> {
        (0..self.rows.len()).filter(|&i| self.rows[i].is_tight_at(x)).collect()
    }
}

/// The relaxation cut out by bounds, edge rows and one row per induced odd
/// cycle, in the order: `-x_v <= 0` (v ascending), `x_v <= 1`, edges
/// lexicographically, then odd cycles by length and lexicographically.
pub fn build_tstab_hrep(g: &Graph) -> HPolytope {
    let n = g.order();
    let mut rows = Vec::new();
    for v in 0..n {
        let mut c = vec![0; n];
        c[v] = -1;
        rows.push(LinearInequality::new(c, 0, RowTag::NonNeg(v)));
    }
    for v in 0..n {
        rows.push(LinearInequality::sum_at_most(n, [v], 1, RowTag::Upper(v)));
    }
    for (u, v) in g.edges() {
        rows.push(LinearInequality::sum_at_most(n, [u, v], 1, RowTag::Edge(u, v)));
    }
    for c in g.enumerate_induced_odd_cycles() {
        let rhs = (c.len() as i64 - 1) / 2;
        let row = LinearInequality::sum_at_most(n, c.iter().copied(), rhs, RowTag::Other);
        rows.push(LinearInequality { tag: RowTag::OddCycle(c), ..row });
    }
    HPolytope { dim: n, rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_divides_gcd() {
        let r = LinearInequality::new(vec![2, 4, 0], 6, RowTag::Other);
        assert_eq!(r.coeffs(), &[1, 2, 0]);
        assert_eq!(r.rhs(), 3);
        let nonneg = LinearInequality::new(vec![0, -3], 0, RowTag::Other);
        assert_eq!(nonneg.coeffs(), &[0, -1]);
        assert_eq!(nonneg.as_nonneg(), Some(1));
    }

    #[test]
    fn row_counts() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(build_tstab_hrep(&c5).rows().len(), 16);
        let k4 = Graph::empty(4).unwrap().complement();
        assert_eq!(build_tstab_hrep(&k4).rows().len(), 18);
        assert_eq!(build_tstab_hrep(&Graph::empty(3).unwrap()).rows().len(), 6);
    }

    #[test]
    fn display() {
        let r = LinearInequality::new(vec![1, 0, -2], 1, RowTag::Other);
        assert_eq!(r.to_string(), "x0 -2x2 <= 1");
    }
}
