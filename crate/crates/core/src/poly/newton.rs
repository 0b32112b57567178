use num_bigint::BigInt;

use super::polynomial::{Monomial, Polynomial};
use crate::convention::Convention;
use crate::error::{Error, Result};
use crate::linalg::lattice::to_rational;
use crate::linalg::{cone_feasible, Matrix};
use crate::scalar::Field;
use crate::Rational;

/// Vertices of the Newton polytope, in graded-lex order.
///
/// A support point is a vertex iff it is not a convex combination of the
/// other support points, decided by an exact LP on the lifted points `(u, 1)`.
pub fn newton_polytope<F: Field>(f: &Polynomial<F>) -> Result<Vec<Monomial>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let support = f.support();
    let lift = |m: &Monomial| -> Vec<BigInt> {
        m.0.iter().map(|&e| BigInt::from(e)).chain(std::iter::once(BigInt::from(1))).collect()
    };
    let dim = f.nvars() + 1;
    let mut vertices = Vec::new();
    for (i, m) in support.iter().enumerate() {
        let others: Vec<Vec<BigInt>> = support.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, o)| lift(o)).collect();
        let rays = Matrix::from_columns(dim, &others);
        let none = Matrix::from_columns(dim, &[]);
        if !cone_feasible(&rays, &none, &to_rational(&lift(m)))? {
            vertices.push(m.clone());
        }
    }
    Ok(vertices)
}

/// Sum of the terms whose exponents optimize `w · u`.
pub fn initial_form<F: Field>(f: &Polynomial<F>, w: &[Rational], convention: Convention) -> Result<Polynomial<F>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if w.len() != f.nvars() {
        return Err(Error::DimMismatch { expected: f.nvars(), found: w.len() });
    }
    let weights: Vec<(Rational, &Monomial, &F)> = f.terms().map(|(m, c)| (m.weight(w), m, c)).collect();
    let best = match convention {
        Convention::Min => weights.iter().map(|t| &t.0).min(),
        Convention::Max => weights.iter().map(|t| &t.0).max(),
    }
    .expect("nonzero polynomial")
    .clone();
    let terms = weights.into_iter().filter(|t| t.0 == best).map(|(_, m, c)| (m.clone(), c.clone()));
    Ok(Polynomial::from_terms(f.vars().clone(), terms))
}
