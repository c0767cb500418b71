use std::collections::BTreeSet;

use super::RatVector;
use crate::graph::Graph;

/// A finite point set, deduplicated by exact coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VRepresentation {
    points: BTreeSet<RatVector>,
}

impl VRepresentation {
    pub fn from_points(points: impl IntoIterator<Item = RatVector>) -> Self {
        VRepresentation { points: points.into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: &RatVector) -> bool {
        self.points.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = &RatVector> {
        self.points.iter()
    }

    pub fn all_integral(&self) -> bool {
        self.points.iter().all(is_integral_point)
    }

    /// The smallest non-0/1 point in coordinate order.
    pub fn first_fractional(&self) -> Option<&RatVector> {
        self.points.iter().find(|x| !is_integral_point(x))
    }

    pub fn fractional(&self) -> impl Iterator<Item = &RatVector> {
        self.points.iter().filter(|x| !is_integral_point(x))
    }

    /// One point per line, coordinates as `num/den`, lines in byte order.
    pub fn dump(&self) -> String {
        let mut lines: Vec<String> = self.points.iter().map(|x| x.to_string()).collect();
        lines.sort();
        let mut out = String::new();
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
        out
    }
}

/// Every coordinate is exactly 0 or 1.
pub fn is_integral_point(x: &RatVector) -> bool {
    x.iter().all(|c| c.is_zero() || c.is_one())
}

/// Characteristic vectors of all independent sets of `g`.
pub fn stab_vertices(g: &Graph) -> VRepresentation {
    let n = g.order();
    VRepresentation::from_points(
        g.enumerate_independent_sets().into_iter().map(|s| RatVector::indicator(n, s)),
    )
}

pub fn polytopes_equal(a: &VRepresentation, b: &VRepresentation) -> bool {
    a == b
}

impl FromIterator<RatVector> for VRepresentation {
    fn from_iter<I: IntoIterator<Item = RatVector>>(iter: I) -> Self {
        Self::from_points(iter)
    }
}
