//! Incremental double description over homogeneous integer coordinates.
//!
//! A vertex `x` is stored as `(h_0, .., h_{n-1}, d)` with `x = h / d`,
//! `d > 0` and `gcd(h, d) = 1`, so equal points have equal keys. The run
//! starts from the `2^n` vertices of the unit box, then cuts with the
//! remaining rows in order. Arithmetic is attempted in `i64` with overflow
//! checks and repeated on big integers if any step overflows.

use std::collections::HashSet;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{HPolytope, PolytopeError, RatVector, Rational, VRepresentation};

/// Default soft limit on the ambient dimension.
pub const DEFAULT_DIM_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DdOptions {
    pub dim_cap: usize,
    /// Verify after the run that every vertex has `dim` independent tight rows.
    pub check_rank: bool,
}

impl Default for DdOptions {
    fn default() -> Self {
        DdOptions { dim_cap: DEFAULT_DIM_CAP, check_rank: cfg!(debug_assertions) }
    }
}

trait Scalar: Clone + Eq + Hash + Sized {
    fn from_i64(v: i64) -> Self;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn sign(&self) -> i8;
    fn to_big(&self) -> BigInt;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn sign(&self) -> i8 {
        self.signum() as i8
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn sign(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

struct Overflow;

/// Tight-row set over the rows inserted so far.
#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(words: usize) -> Self {
        Bits(vec![0; words])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn is_subset(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}

struct Vertex<S> {
    h: Vec<S>,
    tight: Bits,
}

/// Box rows located in `h`: `lower[v]` is `-x_v <= 0`, `upper[v]` is `x_v <= 1`.
fn box_rows(h: &HPolytope) -> Result<(Vec<usize>, Vec<usize>), PolytopeError> {
    let n = h.dim();
    let mut lower = vec![usize::MAX; n];
    let mut upper = vec![usize::MAX; n];
    for (i, row) in h.rows().iter().enumerate() {
        if let Some(v) = row.as_nonneg() {
            if lower[v] == usize::MAX {
                lower[v] = i;
            }
        } else if let Some(v) = row.as_upper() {
            if upper[v] == usize::MAX {
                upper[v] = i;
            }
        }
    }
    let missing = lower.iter().chain(&upper).filter(|&&i| i == usize::MAX).count();
    if missing > 0 {
        return Err(PolytopeError::Unbounded { missing });
    }
    Ok((lower, upper))
}

fn normalize<S: Scalar>(h: &mut [S]) {
    let g = h.iter().fold(S::from_i64(0), |g, c| g.gcd(c));
    if g.sign() != 0 && g != S::from_i64(1) {
        for c in h.iter_mut() {
            *c = c.div(&g);
        }
    }
}

fn run<S: Scalar>(h: &HPolytope, lower: &[usize], upper: &[usize]) -> Result<Vec<Vec<S>>, Overflow> {
    let n = h.dim();
    let rows = h.rows();
    let words = rows.len().div_ceil(64).max(1);
    let mut is_box = vec![false; rows.len()];
    for &i in lower.iter().chain(upper) {
        is_box[i] = true;
    }

    let mut verts: Vec<Vertex<S>> = (0..1usize << n)
        .map(|mask| {
            let mut tight = Bits::new(words);
            let mut h = Vec::with_capacity(n + 1);
            for v in 0..n {
                let one = mask >> v & 1 == 1;
                tight.set(if one { upper[v] } else { lower[v] });
                h.push(S::from_i64(one as i64));
            }
            h.push(S::from_i64(1));
            Vertex { h, tight }
        })
        .collect();

    for (ri, row) in rows.iter().enumerate() {
        if is_box[ri] {
            continue;
        }
        let coeffs: Vec<S> = row.coeffs().iter().map(|&c| S::from_i64(c)).collect();
        let rhs = S::from_i64(row.rhs());
        // slack = rhs * d - a . x
        let mut slack = Vec::with_capacity(verts.len());
        for v in &verts {
            let mut s = rhs.mul(&v.h[n]).ok_or(Overflow)?;
            for (c, x) in coeffs.iter().zip(&v.h) {
                if c.sign() != 0 {
                    s = s.sub(&c.mul(x).ok_or(Overflow)?).ok_or(Overflow)?;
                }
            }
            slack.push(s);
        }
        let minus: Vec<usize> = (0..verts.len()).filter(|&i| slack[i].sign() < 0).collect();
        if minus.is_empty() {
            for (i, v) in verts.iter_mut().enumerate() {
                if slack[i].sign() == 0 {
                    v.tight.set(ri);
                }
            }
            continue;
        }
        let plus: Vec<usize> = (0..verts.len()).filter(|&i| slack[i].sign() > 0).collect();

        let mut fresh: Vec<Vertex<S>> = Vec::new();
        for &p in &plus {
            for &q in &minus {
                let z = verts[p].tight.and(&verts[q].tight);
                if (z.count() as usize) + 1 < n {
                    continue;
                }
                let adjacent = (0..verts.len()).all(|r| r == p || r == q || !z.is_subset(&verts[r].tight));
                if !adjacent {
                    continue;
                }
                let (sp, sq) = (&slack[p], &slack[q]);
                let nsq = sq.neg().ok_or(Overflow)?;
                let mut hn = Vec::with_capacity(n + 1);
                for k in 0..=n {
                    let a = nsq.mul(&verts[p].h[k]).ok_or(Overflow)?;
                    let b = sp.mul(&verts[q].h[k]).ok_or(Overflow)?;
                    hn.push(a.add(&b).ok_or(Overflow)?);
                }
                normalize(&mut hn);
                let mut tight = z;
                tight.set(ri);
                fresh.push(Vertex { h: hn, tight });
            }
        }

        let mut next: Vec<Vertex<S>> = Vec::with_capacity(verts.len() - minus.len() + fresh.len());
        for (i, mut v) in verts.into_iter().enumerate() {
            match slack[i].sign() {
                0 => {
                    v.tight.set(ri);
                    next.push(v);
                }
                1 => next.push(v),
                _ => {}
            }
        }
        next.extend(fresh);
        verts = next;
    }

    let mut seen = HashSet::with_capacity(verts.len());
    Ok(verts.into_iter().map(|v| v.h).filter(|h| seen.insert(h.clone())).collect())
}

fn to_point<S: Scalar>(h: &[S]) -> RatVector {
    let n = h.len() - 1;
    let d = h[n].to_big();
    RatVector::new(h[..n].iter().map(|x| Rational::from_big(x.to_big(), d.clone())).collect())
}

/// Vertices of a polytope containing its `[0,1]` box rows.
pub fn enumerate_vertices(h: &HPolytope) -> Result<VRepresentation, PolytopeError> {
    enumerate_vertices_with(h, &DdOptions::default())
}

pub fn enumerate_vertices_with(h: &HPolytope, opts: &DdOptions) -> Result<VRepresentation, PolytopeError> {
    if h.dim() > opts.dim_cap {
        return Err(PolytopeError::DimensionCap { dim: h.dim(), cap: opts.dim_cap });
    }
    if h.dim() == 0 {
        return Err(PolytopeError::DimensionMismatch { expected: 1, found: 0 });
    }
    let (lower, upper) = box_rows(h)?;
    let points: Vec<RatVector> = match run::<i64>(h, &lower, &upper) {
        Ok(vs) => vs.iter().map(|v| to_point(v)).collect(),
        Err(Overflow) => match run::<BigInt>(h, &lower, &upper) {
            Ok(vs) => vs.iter().map(|v| to_point(v)).collect(),
            Err(Overflow) => unreachable!("big integer arithmetic does not overflow"),
        },
    };
    if opts.check_rank {
        for x in &points {
            let tight: Vec<&[i64]> = h.tight_rows(x).into_iter().map(|i| h.rows()[i].coeffs()).collect();
            assert_eq!(super::linalg::rank(&tight), h.dim(), "point {x} is not a vertex");
        }
    }
    Ok(VRepresentation::from_points(points))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::polytope::{build_tstab_hrep, LinearInequality, RowTag};
    use crate::graph::Graph;

    fn is_normalized(h: &[BigInt]) -> bool {
        let d = &h[h.len() - 1];
        d.is_positive() && h.iter().fold(BigInt::zero(), |g, c| Integer::gcd(&g, c)).is_one()
    }

    fn unit_box(n: usize) -> HPolytope {
        let mut rows = Vec::new();
        for v in 0..n {
            let mut c = vec![0; n];
            c[v] = -1;
            rows.push(LinearInequality::new(c, 0, RowTag::NonNeg(v)));
            rows.push(LinearInequality::sum_at_most(n, [v], 1, RowTag::Upper(v)));
        }
        HPolytope::new(n, rows).unwrap()
    }

    #[test]
    fn unit_square() {
        let v = enumerate_vertices(&unit_box(2)).unwrap();
        assert_eq!(v.dump(), "0/1 0/1\n0/1 1/1\n1/1 0/1\n1/1 1/1\n");
    }

    #[test]
    fn k3_is_a_simplex() {
        let k3 = Graph::empty(3).unwrap().complement();
        let v = enumerate_vertices(&build_tstab_hrep(&k3)).unwrap();
        assert_eq!(v.len(), 4);
        assert!(v.all_integral());
    }

    #[test]
    fn k4_has_the_third_point() {
        let k4 = Graph::empty(4).unwrap().complement();
        let v = enumerate_vertices(&build_tstab_hrep(&k4)).unwrap();
        assert_eq!(v.len(), 6);
        let third = RatVector::constant(4, Rational::new(1, 3));
        assert!(v.contains(&third));
        assert_eq!(v.first_fractional(), Some(&third));
    }

    #[test]
    fn missing_box_rows_is_unbounded() {
        let h = HPolytope::new(2, vec![LinearInequality::sum_at_most(2, [0, 1], 1, RowTag::Other)]).unwrap();
        assert!(matches!(enumerate_vertices(&h), Err(PolytopeError::Unbounded { missing: 4 })));
    }

    #[test]
    fn dimension_cap() {
        let h = unit_box(3);
        let opts = DdOptions { dim_cap: 2, check_rank: false };
        assert!(matches!(enumerate_vertices_with(&h, &opts), Err(PolytopeError::DimensionCap { dim: 3, cap: 2 })));
    }

    #[test]
    fn cut_with_non_unit_coefficients() {
        // 2x + y <= 2 over the unit square: (0,0) (1,0) (0,1) (1/2,1)
        let mut h = unit_box(2);
        h.push(LinearInequality::new(vec![2, 1], 2, RowTag::Other)).unwrap();
        let v = enumerate_vertices(&h).unwrap();
        assert_eq!(v.dump(), "0/1 0/1\n0/1 1/1\n1/1 0/1\n1/2 1/1\n");
    }

    #[test]
    fn big_integer_fallback_agrees() {
        let k4 = Graph::empty(4).unwrap().complement();
        let h = build_tstab_hrep(&k4);
        let (lo, up) = box_rows(&h).unwrap();
        let small = run::<i64>(&h, &lo, &up).ok().unwrap();
        let big = run::<BigInt>(&h, &lo, &up).ok().unwrap();
        let a: HashSet<_> = small.iter().map(|v| to_point(v)).collect();
        let b: HashSet<_> = big.iter().map(|v| to_point(v)).collect();
        assert_eq!(a, b);
        assert!(big.iter().all(|v| is_normalized(v)));
    }
}
