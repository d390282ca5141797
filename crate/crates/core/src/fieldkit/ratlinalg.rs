use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::Rational;

/// Row-reduce a rational matrix in place; returns pivot columns.
fn reduce(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = Rational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a rational matrix given by rows.
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut m = rows.to_vec();
    reduce(&mut m, cols).len()
}

/// Outcome of solving `A x = b` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSolution {
    /// A particular solution with every free variable set to zero, or
    /// `None` when the system is inconsistent.
    pub solution: Option<Vec<Rational>>,
    /// Dimension of the solution space of the homogeneous system.
    pub free_vars: usize,
}

/// Solve `A x = b` over Q. The returned solution is the basic solution with
/// all free variables zero.
pub fn solve_rational(a: &[Vec<Rational>], b: &[Rational]) -> RationalSolution {
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = reduce(&mut m, cols + 1);
    let free_vars = cols - pivots.iter().filter(|&&c| c < cols).count();
    if pivots.contains(&cols) {
        return RationalSolution { solution: None, free_vars };
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = m[i][cols].clone();
    }
    RationalSolution { solution: Some(x), free_vars }
}
