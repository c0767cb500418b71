//! Small exact linear algebra over the rationals, by fraction-free
//! elimination on big integers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{RatVector, Rational};

fn to_big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect()
}

/// Bareiss elimination in place; returns the pivot columns in order.
fn eliminate(m: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i == r {
                continue;
            }
            let (lead, f) = (m[r][c].clone(), m[i][c].clone());
            for k in 0..m[i].len() {
                let v = &m[i][k] * &lead - &f * &m[r][k];
                // rows below the pivot stay exactly divisible by the previous pivot
                m[i][k] = if i > r { v / &prev } else { v };
            }
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank over the rationals of the given integer rows.
pub fn rank(rows: &[&[i64]]) -> usize {
    let Some(cols) = rows.first().map(|r| r.len()) else { return 0 };
    let mut m = to_big(rows);
    eliminate(&mut m, cols).len()
}

/// The unique solution of `A x = b`, or `None` when `A` has rank below the
/// number of columns or the system is inconsistent.
pub fn solve_unique(a: &[&[i64]], b: &[i64]) -> Option<RatVector> {
    let cols = a.first()?.len();
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(r, &rhs)| r.iter().chain(std::iter::once(&rhs)).map(|&c| BigInt::from(c)).collect())
        .collect();
    let pivots = eliminate(&mut m, cols + 1);
    if pivots.len() != cols || pivots.contains(&cols) {
        return None;
    }
    // after full elimination row i has its only nonzero coefficient at column i
    let coords = (0..cols)
        .map(|i| {
            let (num, den) = (m[i][cols].clone(), m[i][i].clone());
            debug_assert!(!den.is_zero());
            if den.is_negative() {
                Rational::from_big(-num, -den)
            } else {
                Rational::from_big(num, den)
            }
        })
        .collect();
    Some(RatVector::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        let rows: [&[i64]; 3] = [&[1, 1, 0], &[0, 1, 1], &[1, 2, 1]];
        assert_eq!(rank(&rows), 2);
        let id: [&[i64]; 3] = [&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]];
        assert_eq!(rank(&id), 3);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn k4_triangle_system() {
        // four triangle rows of K4 tight at 1/3 each
        let rows: [&[i64]; 4] = [&[1, 1, 1, 0], &[1, 1, 0, 1], &[1, 0, 1, 1], &[0, 1, 1, 1]];
        let x = solve_unique(&rows, &[1, 1, 1, 1]).unwrap();
        assert_eq!(x, RatVector::constant(4, Rational::new(1, 3)));
    }

    #[test]
    fn singular_and_inconsistent() {
        let rows: [&[i64]; 2] = [&[1, 1], &[2, 2]];
        assert!(solve_unique(&rows, &[1, 2]).is_none());
        assert!(solve_unique(&rows, &[1, 3]).is_none());
        let over: [&[i64]; 3] = [&[1, 0], &[0, 1], &[1, 1]];
        assert_eq!(solve_unique(&over, &[1, 2, 3]).unwrap().to_string(), "1/1 2/1");
        assert!(solve_unique(&over, &[1, 2, 4]).is_none());
    }
}
