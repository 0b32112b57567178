//! Two-phase primal simplex over an exact ordered field, Bland's rule.
//!
//! Problems are in standard form: maximize `c·x` subject to `A x = b`,
//! `x >= 0`.

use super::matrix::Matrix;
use crate::scalar::OrderedField;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome<F> {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<F>, value: F },
}

struct Tableau<F> {
    // rows 0..m are constraints; last column is the right-hand side
    t: Matrix<F>,
    basis: Vec<usize>,
    // columns at or beyond this index may never enter the basis
    enter_limit: usize,
}

impl<F: OrderedField> Tableau<F> {
    fn rhs_col(&self) -> usize {
        self.t.cols() - 1
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = F::one() / self.t[(row, col)].clone();
        for j in 0..self.t.cols() {
            self.t[(row, j)] = self.t[(row, j)].clone() * inv.clone();
        }
        for i in 0..self.t.rows() {
            if i == row || self.t[(i, col)].is_zero() {
                continue;
            }
            let f = self.t[(i, col)].clone();
            for j in 0..self.t.cols() {
                let v = f.clone() * self.t[(row, j)].clone();
                self.t[(i, j)] = self.t[(i, j)].clone() - v;
            }
        }
        self.basis[row] = col;
    }

    /// Reduced costs `c_j - c_B B^{-1} A_j` for the current basis.
    fn reduced_costs(&self, cost: &[F]) -> Vec<F> {
        (0..self.enter_limit)
            .map(|j| {
                let mut r = cost[j].clone();
                for (i, &bj) in self.basis.iter().enumerate() {
                    r = r - cost[bj].clone() * self.t[(i, j)].clone();
                }
                r
            })
            .collect()
    }

    /// Runs simplex iterations maximizing `cost`; returns false if unbounded.
    fn optimize(&mut self, cost: &[F]) -> bool {
        loop {
            let reduced = self.reduced_costs(cost);
            let Some(enter) = (0..self.enter_limit).find(|&j| reduced[j].is_positive() && !self.basis.contains(&j))
            else {
                return true;
            };
            let rhs = self.rhs_col();
            let mut leave: Option<(usize, F)> = None;
            for i in 0..self.t.rows() {
                let a = self.t[(i, enter)].clone();
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.t[(i, rhs)].clone() / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((row, _)) => self.pivot(row, enter),
                None => return false,
            }
        }
    }

    fn objective(&self, cost: &[F]) -> F {
        let rhs = self.rhs_col();
        self.basis.iter().enumerate().fold(F::zero(), |acc, (i, &b)| acc + cost[b].clone() * self.t[(i, rhs)].clone())
    }
}

/// Solves `max c·x s.t. A x = b, x >= 0` exactly.
pub fn maximize<F: OrderedField>(c: &[F], a: &Matrix<F>, b: &[F]) -> LpOutcome<F> {
    let (m, n) = (a.rows(), a.cols());
    assert_eq!(c.len(), n);
    assert_eq!(b.len(), m);
    // Phase 1 tableau: [A | I | b] with rows flipped so that b >= 0.
    let mut t = Matrix::<F>::zeros(m, n + m + 1);
    for i in 0..m {
        let flip = b[i].is_negative();
        for j in 0..n {
            t[(i, j)] = if flip { -a[(i, j)].clone() } else { a[(i, j)].clone() };
        }
        t[(i, n + i)] = F::one();
        t[(i, n + m)] = if flip { -b[i].clone() } else { b[i].clone() };
    }
    let mut tab = Tableau { t, basis: (n..n + m).collect(), enter_limit: n + m };
    let mut phase1 = vec![F::zero(); n + m];
    for c in phase1.iter_mut().skip(n) {
        *c = -F::one();
    }
    tab.optimize(&phase1);
    if tab.objective(&phase1).is_negative() {
        return LpOutcome::Infeasible;
    }
    // Drive artificial variables out of the basis; drop redundant rows.
    let mut row = 0;
    while row < tab.t.rows() {
        if tab.basis[row] >= n {
            match (0..n).find(|&j| !tab.t[(row, j)].is_zero()) {
                Some(j) => tab.pivot(row, j),
                None => {
                    tab.t = drop_row(&tab.t, row);
                    tab.basis.remove(row);
                    continue;
                }
            }
        }
        row += 1;
    }
    tab.enter_limit = n;
    let mut cost = c.to_vec();
    cost.extend(std::iter::repeat_n(F::zero(), m));
    if !tab.optimize(&cost) {
        return LpOutcome::Unbounded;
    }
    let rhs = tab.rhs_col();
    let mut x = vec![F::zero(); n];
    for (i, &bj) in tab.basis.iter().enumerate() {
        if bj < n {
            x[bj] = tab.t[(i, rhs)].clone();
        }
    }
    let value = x.iter().zip(c).fold(F::zero(), |acc, (xi, ci)| acc + xi.clone() * ci.clone());
    LpOutcome::Optimal { x, value }
}

fn drop_row<F: Clone>(m: &Matrix<F>, row: usize) -> Matrix<F> {
    let rows: Vec<Vec<F>> = (0..m.rows()).filter(|&i| i != row).map(|i| m.row(i).to_vec()).collect();
    Matrix::from_rows(m.cols(), &rows)
}

/// A nonnegative solution of `A x = b`, if one exists.
pub fn feasible_point<F: OrderedField>(a: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    match maximize(&vec![F::zero(); a.cols()], a, b) {
        LpOutcome::Optimal { x, .. } => Some(x),
        _ => None,
    }
}
