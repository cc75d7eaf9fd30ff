//! Generic intertwiner solver: bases of {T : T A = B T for all pairs}.
//!
//! Diagonal pairs (simultaneous weight operators) are used first to
//! prune the support of T to weight-matched positions; the remaining
//! constraints are intersected one pair at a time on the surviving
//! coefficient space. This keeps commutants of the larger algebras
//! cheap without giving up exactness or generality.

use alloc::vec::Vec;

use super::mat::{kernel_rows, rref, Mat};
use super::scalar::Scalar;

/// Basis of {T of shape rows x cols : T A = B T for every pair (A, B)},
/// canonicalized by row reduction of the vectorized matrices.
pub fn intertwiner_basis(rows: usize, cols: usize, pairs: &[(&Mat, &Mat)]) -> Vec<Mat> {
    let mut diagonal = Vec::new();
    let mut general = Vec::new();
    for &(a, b) in pairs {
        match (a.as_diagonal(), b.as_diagonal()) {
            (Some(da), Some(db)) => diagonal.push((da, db)),
            _ => general.push((a, b)),
        }
    }

    // T[i][j] can be nonzero only where every diagonal pair agrees.
    let mut support: Vec<(usize, usize)> = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if diagonal.iter().all(|(da, db)| db[i] == da[j]) {
                support.push((i, j));
            }
        }
    }
    if support.is_empty() {
        return Vec::new();
    }

    let mut basis: Vec<Mat> = support
        .iter()
        .map(|&(i, j)| {
            let mut m = Mat::zero(rows, cols);
            m.set(i, j, Scalar::one());
            m
        })
        .collect();

    for (a, b) in general {
        if basis.is_empty() {
            break;
        }
        // Column t of the constraint matrix is vec(T_t A - B T_t).
        let images: Vec<Mat> = basis.iter().map(|t| &(t * a) - &(b * t)).collect();
        let constraint = Mat::from_fn(rows * cols, basis.len(), |rc, t| {
            images[t].get(rc / cols, rc % cols).clone()
        });
        let coeffs = kernel_rows(&constraint);
        let mut next = Vec::with_capacity(coeffs.rows());
        for s in 0..coeffs.rows() {
            let mut acc = Mat::zero(rows, cols);
            for (t, old) in basis.iter().enumerate() {
                let c = coeffs.get(s, t);
                if !c.is_zero() {
                    acc = &acc + &old.scale(c);
                }
            }
            next.push(acc);
        }
        basis = next;
    }

    canonicalize(rows, cols, basis)
}

fn canonicalize(rows: usize, cols: usize, basis: Vec<Mat>) -> Vec<Mat> {
    if basis.is_empty() {
        return basis;
    }
    let stacked = Mat::from_fn(basis.len(), rows * cols, |t, rc| {
        basis[t].get(rc / cols, rc % cols).clone()
    });
    let (r, pivots) = rref(&stacked);
    (0..pivots.len())
        .map(|t| Mat::from_fn(rows, cols, |i, j| r.get(t, i * cols + j).clone()))
        .collect()
}
