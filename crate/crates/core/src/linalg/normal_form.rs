//! Hermite and Smith normal forms over a Euclidean integer ring.

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::IntegerScalar;

/// Extended gcd: returns `(g, x, y)` with `x*a + y*b = g` and `g >= 0`.
pub fn extended_gcd<I: IntegerScalar>(a: &I, b: &I) -> (I, I, I) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (I::one(), I::zero());
    let (mut old_t, mut t) = (I::zero(), I::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = old_r - q.clone() * r.clone();
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = old_s - q.clone() * s.clone();
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = old_t - q * t.clone();
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Replaces columns `(a, b)` of `m` by `(x*a + y*b, z*a + w*b)`.
fn combine_columns<I: IntegerScalar>(m: &mut Matrix<I>, a: usize, b: usize, coeffs: [&I; 4]) {
    let [x, y, z, w] = coeffs;
    for i in 0..m.rows() {
        let ca = m[(i, a)].clone();
        let cb = m[(i, b)].clone();
        m[(i, a)] = x.clone() * ca.clone() + y.clone() * cb.clone();
        m[(i, b)] = z.clone() * ca + w.clone() * cb;
    }
}

fn combine_rows<I: IntegerScalar>(m: &mut Matrix<I>, a: usize, b: usize, coeffs: [&I; 4]) {
    let [x, y, z, w] = coeffs;
    for j in 0..m.cols() {
        let ra = m[(a, j)].clone();
        let rb = m[(b, j)].clone();
        m[(a, j)] = x.clone() * ra.clone() + y.clone() * rb.clone();
        m[(b, j)] = z.clone() * ra + w.clone() * rb;
    }
}

/// `col[target] -= q * col[source]`
fn sub_column<I: IntegerScalar>(m: &mut Matrix<I>, target: usize, source: usize, q: &I) {
    for i in 0..m.rows() {
        let v = m[(i, source)].clone() * q.clone();
        m[(i, target)] = m[(i, target)].clone() - v;
    }
}

fn sub_row<I: IntegerScalar>(m: &mut Matrix<I>, target: usize, source: usize, q: &I) {
    for j in 0..m.cols() {
        let v = m[(source, j)].clone() * q.clone();
        m[(target, j)] = m[(target, j)].clone() - v;
    }
}

fn negate_column<I: IntegerScalar>(m: &mut Matrix<I>, j: usize) {
    for i in 0..m.rows() {
        m[(i, j)] = -m[(i, j)].clone();
    }
}

fn negate_row<I: IntegerScalar>(m: &mut Matrix<I>, i: usize) {
    for j in 0..m.cols() {
        m[(i, j)] = -m[(i, j)].clone();
    }
}

/// Column-style Hermite normal form.
///
/// Returns `(H, U)` with `H = M * U`, `U` unimodular, and `H` in lower
/// echelon form: each pivot is positive and the entries of a pivot row to the
/// left of the pivot lie in `[0, pivot)`. Zero columns come last.
pub fn hermite_normal_form<I: IntegerScalar>(m: &Matrix<I>) -> (Matrix<I>, Matrix<I>) {
    let mut h = m.clone();
    let mut u = Matrix::<I>::identity(m.cols());
    let mut pivot_col = 0;
    for row in 0..m.rows() {
        if pivot_col == m.cols() {
            break;
        }
        for j in pivot_col + 1..m.cols() {
            if h[(row, j)].is_zero() {
                continue;
            }
            let a = h[(row, pivot_col)].clone();
            let b = h[(row, j)].clone();
            let (g, x, y) = extended_gcd(&a, &b);
            let z = -(b / g.clone());
            let w = a / g;
            combine_columns(&mut h, pivot_col, j, [&x, &y, &z, &w]);
            combine_columns(&mut u, pivot_col, j, [&x, &y, &z, &w]);
        }
        if h[(row, pivot_col)].is_zero() {
            continue;
        }
        if h[(row, pivot_col)].is_negative() {
            negate_column(&mut h, pivot_col);
            negate_column(&mut u, pivot_col);
        }
        let p = h[(row, pivot_col)].clone();
        for j in 0..pivot_col {
            let q = h[(row, j)].div_floor(&p);
            if !q.is_zero() {
                sub_column(&mut h, j, pivot_col, &q);
                sub_column(&mut u, j, pivot_col, &q);
            }
        }
        pivot_col += 1;
    }
    (h, u)
}

/// Smith normal form: returns `(D, P, Q)` with `D = P * M * Q` diagonal,
/// nonnegative, and each diagonal entry dividing the next.
pub fn smith_normal_form<I: IntegerScalar>(m: &Matrix<I>) -> (Matrix<I>, Matrix<I>, Matrix<I>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut p = Matrix::<I>::identity(rows);
    let mut q = Matrix::<I>::identity(cols);
    for t in 0..rows.min(cols) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let Some((pi, pj)) = min_abs_entry(&d, t, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))))
        else {
            break;
        };
        d.swap_rows(t, pi);
        p.swap_rows(t, pi);
        d.swap_cols(t, pj);
        q.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !d[(i, t)].is_zero() {
                    let f = d[(i, t)].div_floor(&d[(t, t)]);
                    sub_row(&mut d, i, t, &f);
                    sub_row(&mut p, i, t, &f);
                    clean &= d[(i, t)].is_zero();
                }
            }
            for j in t + 1..cols {
                if !d[(t, j)].is_zero() {
                    let f = d[(t, j)].div_floor(&d[(t, t)]);
                    sub_column(&mut d, j, t, &f);
                    sub_column(&mut q, j, t, &f);
                    clean &= d[(t, j)].is_zero();
                }
            }
            if !clean {
                let line = (t..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = min_abs_entry(&d, t, line).expect("pivot line is nonzero");
                d.swap_rows(t, pi);
                p.swap_rows(t, pi);
                d.swap_cols(t, pj);
                q.swap_cols(t, pj);
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(d[(i, j)].clone() % d[(t, t)].clone()).is_zero())
            });
            match offender {
                Some(i) => {
                    let one = I::one();
                    let zero = I::zero();
                    combine_rows(&mut d, t, i, [&one, &one, &zero, &one]);
                    combine_rows(&mut p, t, i, [&one, &one, &zero, &one]);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut p, t);
        }
    }
    (d, p, q)
}

fn min_abs_entry<I: IntegerScalar>(
    m: &Matrix<I>,
    _t: usize,
    positions: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), I)> = None;
    for (i, j) in positions {
        let v = m[(i, j)].abs();
        if v.is_zero() {
            continue;
        }
        if best.as_ref().is_none_or(|(_, b)| v < *b) {
            best = Some(((i, j), v));
        }
    }
    best.map(|(pos, _)| pos)
}

/// Nonzero diagonal entries of the Smith form (the invariant factors).
pub fn invariant_factors<I: IntegerScalar>(m: &Matrix<I>) -> Vec<I> {
    let (d, _, _) = smith_normal_form(m);
    (0..m.rows().min(m.cols())).map(|i| d[(i, i)].clone()).take_while(|x| !x.is_zero()).collect()
}

/// Exact determinant by fraction-free Bareiss elimination.
pub fn determinant<I: IntegerScalar>(m: &Matrix<I>) -> I {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return I::one();
    }
    let mut a = m.clone();
    let mut sign = I::one();
    let mut prev = I::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return I::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                a[(i, j)] = v / prev.clone();
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * a[(n - 1, n - 1)].clone()
}

/// Divides an integer vector by the gcd of its entries.
pub fn primitive_vector<I: IntegerScalar>(v: &[I]) -> Result<Vec<I>> {
    let g = v.iter().fold(I::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x.clone() / g.clone()).collect())
}
