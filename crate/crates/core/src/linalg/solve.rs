//! Exact Gaussian elimination over a field.

use super::matrix::Matrix;
use crate::scalar::Field;

/// Reduced row echelon form. Returns the reduced matrix and its pivot columns.
pub fn row_reduce<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols() {
        if r == a.rows() {
            break;
        }
        let Some(p) = (r..a.rows()).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = F::one() / a[(r, c)].clone();
        for j in c..a.cols() {
            a[(r, j)] = a[(r, j)].clone() * inv.clone();
        }
        for i in 0..a.rows() {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..a.cols() {
                let v = f.clone() * a[(r, j)].clone();
                a[(i, j)] = a[(i, j)].clone() - v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    row_reduce(m).1.len()
}

/// Some solution of `A x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve<F: Field>(a: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length");
    let aug = Matrix::from_fn(a.rows(), a.cols() + 1, |i, j| {
        if j < a.cols() {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let (r, pivots) = row_reduce(&aug);
    if pivots.last() == Some(&a.cols()) {
        return None;
    }
    let mut x = vec![F::zero(); a.cols()];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = r[(i, a.cols())].clone();
    }
    Some(x)
}

/// Basis of the right kernel `{x : A x = 0}`.
pub fn nullspace<F: Field>(a: &Matrix<F>) -> Vec<Vec<F>> {
    let (r, pivots) = row_reduce(a);
    let free: Vec<usize> = (0..a.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); a.cols()];
            v[f] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            v
        })
        .collect()
}

/// Inverse of a square matrix, if it is invertible.
pub fn inverse<F: Field>(a: &Matrix<F>) -> Option<Matrix<F>> {
    let n = a.rows();
    assert_eq!(n, a.cols());
    let aug = a.hstack(&Matrix::identity(n));
    let (r, pivots) = row_reduce(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
}
