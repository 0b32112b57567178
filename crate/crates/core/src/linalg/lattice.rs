//! Sublattices of `Z^n` and the integer-vector helpers built on them.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::normal_form::{hermite_normal_form, invariant_factors, primitive_vector};
use super::simplex::feasible_point;
use super::solve::{nullspace, rank};
use crate::error::{Error, Result};
use crate::{IntegerMatrix, Rational};

pub type IntVec = Vec<BigInt>;

pub fn to_rational(v: &[BigInt]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

/// Clears denominators and divides out the content. Zero maps to zero.
pub fn primitive_from_rational(v: &[Rational]) -> IntVec {
    let lcm = v.iter().fold(BigInt::one(), |l, x| num_integer::lcm(l, x.denom().clone()));
    let ints: IntVec = v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    primitive_vector(&ints).unwrap_or(ints)
}

/// Rank of a set of integer vectors.
pub fn rank_of(vectors: &[IntVec], dim: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&Matrix::from_rows(dim, vectors).map(|x| Rational::from_integer(x.clone())))
}

/// Lattice basis of `{x in Z^n : rows · x = 0}`, read off the column HNF.
pub fn integer_kernel(rows: &[IntVec], dim: usize) -> Vec<IntVec> {
    if rows.is_empty() {
        return (0..dim).map(|i| unit(dim, i)).collect();
    }
    let m = Matrix::from_rows(dim, rows);
    let (h, u) = hermite_normal_form(&m);
    (0..dim).filter(|&j| (0..h.rows()).all(|i| h[(i, j)].is_zero())).map(|j| u.column(j)).collect()
}

pub fn unit(dim: usize, i: usize) -> IntVec {
    (0..dim).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()
}

/// Canonical basis (nonzero HNF columns) of the lattice generated by `gens`.
pub fn hnf_basis(gens: &[IntVec], dim: usize) -> Vec<IntVec> {
    if gens.is_empty() {
        return Vec::new();
    }
    let (h, _) = hermite_normal_form(&Matrix::from_columns(dim, gens));
    h.column_vecs().into_iter().filter(|c| c.iter().any(|x| !x.is_zero())).collect()
}

/// Canonical basis of `span(gens) ∩ Z^n`.
pub fn saturated_basis(gens: &[IntVec], dim: usize) -> Vec<IntVec> {
    if gens.iter().all(|g| g.iter().all(Zero::is_zero)) {
        return Vec::new();
    }
    let perp = integer_kernel(gens, dim);
    hnf_basis(&integer_kernel(&perp, dim), dim)
}

/// Orthogonal projection of `v` onto the complement of `span(basis)`,
/// scaled to a primitive integer vector.
pub fn project_out(v: &[BigInt], basis: &[IntVec]) -> IntVec {
    if basis.is_empty() {
        return primitive_vector(v).unwrap_or_else(|_| v.to_vec());
    }
    let dim = v.len();
    // Solve (B^T B) c = B^T v, then v - B c.
    let b = Matrix::from_columns(dim, basis).map(|x| Rational::from_integer(x.clone()));
    let bt = b.transpose();
    let vr = to_rational(v);
    let c = super::solve::solve(&bt.mul(&b), &bt.mul_vec(&vr)).expect("Gram matrix of a basis is invertible");
    let proj = b.mul_vec(&c);
    let rest: Vec<Rational> = vr.iter().zip(&proj).map(|(a, p)| a - p).collect();
    primitive_from_rational(&rest)
}

/// Rational nullspace of integer rows, scaled to primitive integer vectors.
pub fn rational_kernel(rows: &[IntVec], dim: usize) -> Vec<IntVec> {
    if rows.is_empty() {
        return (0..dim).map(|i| unit(dim, i)).collect();
    }
    let m = Matrix::from_rows(dim, rows).map(|x| Rational::from_integer(x.clone()));
    nullspace(&m).iter().map(|v| primitive_from_rational(v)).collect()
}

/// A subgroup of `Z^n` stored by its canonical column-HNF basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient_dim: usize,
    basis: Vec<IntVec>,
}

impl Lattice {
    pub fn from_generators(ambient_dim: usize, gens: &[IntVec]) -> Self {
        Lattice { ambient_dim, basis: hnf_basis(gens, ambient_dim) }
    }

    /// The saturated lattice `span(gens) ∩ Z^n`.
    pub fn saturated(ambient_dim: usize, gens: &[IntVec]) -> Self {
        Lattice { ambient_dim, basis: saturated_basis(gens, ambient_dim) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Lattice::from_generators(ambient_dim, &(0..ambient_dim).map(|i| unit(ambient_dim, i)).collect::<Vec<_>>())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[IntVec] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> IntegerMatrix {
        Matrix::from_columns(self.ambient_dim, &self.basis)
    }
}

/// Index `[Z^n : L1 + L2]`; the two lattices must jointly span `R^n`.
pub fn lattice_index(l1: &Lattice, l2: &Lattice) -> Result<BigInt> {
    if l1.ambient_dim != l2.ambient_dim {
        return Err(Error::DimMismatch { expected: l1.ambient_dim, found: l2.ambient_dim });
    }
    let n = l1.ambient_dim;
    let gens: Vec<IntVec> = l1.basis.iter().chain(&l2.basis).cloned().collect();
    if rank_of(&gens, n) < n {
        return Err(Error::NotFullRank);
    }
    let factors = invariant_factors(&Matrix::from_columns(n, &gens));
    Ok(factors.into_iter().fold(BigInt::one(), |p, d| p * d.abs()))
}

/// Exact test of `target ∈ cone(rays) + span(lineality)`; generators are columns.
pub fn cone_feasible(rays: &IntegerMatrix, lineality: &IntegerMatrix, target: &[Rational]) -> Result<bool> {
    let n = target.len();
    for m in [rays, lineality] {
        if m.cols() > 0 && m.rows() != n {
            return Err(Error::DimMismatch { expected: n, found: m.rows() });
        }
    }
    let mut cols: Vec<Vec<Rational>> = Vec::new();
    for j in 0..rays.cols() {
        cols.push(to_rational(&rays.column(j)));
    }
    for j in 0..lineality.cols() {
        let l = to_rational(&lineality.column(j));
        cols.push(l.iter().map(|x| -x).collect());
        cols.push(l);
    }
    if cols.is_empty() {
        return Ok(target.iter().all(Zero::is_zero));
    }
    let a = Matrix::from_columns(n, &cols);
    Ok(feasible_point(&a, target).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVec {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn qv(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn lattice_indices() {
        let l1 = Lattice::from_generators(2, &[iv(&[1, 0])]);
        let l2 = Lattice::from_generators(2, &[iv(&[0, 1])]);
        assert_eq!(lattice_index(&l1, &l2).unwrap(), BigInt::from(1));

        let l1 = Lattice::from_generators(2, &[iv(&[1, 1])]);
        let l2 = Lattice::from_generators(2, &[iv(&[1, -1])]);
        assert_eq!(lattice_index(&l1, &l2).unwrap(), BigInt::from(2));
        assert_eq!(lattice_index(&l2, &l1).unwrap(), BigInt::from(2));

        let l2 = Lattice::from_generators(2, &[iv(&[5, 7])]);
        assert_eq!(lattice_index(&Lattice::full(2), &l2).unwrap(), BigInt::from(1));

        let l1 = Lattice::from_generators(2, &[iv(&[1, 1])]);
        assert_eq!(lattice_index(&l1, &l1), Err(Error::NotFullRank));
    }

    #[test]
    fn saturation_and_kernels() {
        let sat = Lattice::saturated(2, &[iv(&[2, 4])]);
        assert_eq!(sat.basis(), &[iv(&[1, 2])]);
        let k = integer_kernel(&[iv(&[1, 1, 1])], 3);
        assert_eq!(k.len(), 2);
        assert_eq!(project_out(&iv(&[0, 0, 1]), &[iv(&[1, 1, 1])]), iv(&[-1, -1, 2]));
    }

    #[test]
    fn cone_membership() {
        let rays = Matrix::from_columns(2, &[iv(&[1, 0]), iv(&[0, 1])]);
        let none = Matrix::from_columns(2, &[]);
        assert!(cone_feasible(&rays, &none, &qv(&[2, 3])).unwrap());
        assert!(!cone_feasible(&rays, &none, &qv(&[-1, 0])).unwrap());

        let rays = Matrix::from_columns(2, &[iv(&[1, 1])]);
        let lin = Matrix::from_columns(2, &[iv(&[1, -1])]);
        assert!(cone_feasible(&rays, &lin, &qv(&[0, 2])).unwrap());
        assert!(!cone_feasible(&rays, &lin, &qv(&[0, -2])).unwrap());

        let bad = Matrix::from_columns(3, &[iv(&[1, 0, 0])]);
        assert!(matches!(cone_feasible(&bad, &none, &qv(&[1, 0])), Err(Error::DimMismatch { .. })));
    }
}
