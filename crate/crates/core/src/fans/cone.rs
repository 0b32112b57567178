use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::dd::{h_to_v, Generators};
use crate::error::{Error, Result};
use crate::linalg::lattice::{project_out, rank_of, saturated_basis, to_rational, IntVec};
use crate::linalg::{dot, Lattice, Matrix};
use crate::{IntegerMatrix, Rational};

/// A rational polyhedral cone, kept in both descriptions.
///
/// Rays are primitive, orthogonal to the lineality space and sorted;
/// inequalities likewise lie in the linear span of the cone. Two cones are
/// equal as sets exactly when they are equal as values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    ambient_dim: usize,
    rays: Vec<IntVec>,
    lineality: Vec<IntVec>,
    inequalities: Vec<IntVec>,
    equations: Vec<IntVec>,
}

fn check_lengths(dim: usize, vs: &[IntVec]) -> Result<()> {
    match vs.iter().find(|v| v.len() != dim) {
        Some(v) => Err(Error::DimMismatch { expected: dim, found: v.len() }),
        None => Ok(()),
    }
}

/// Canonical (rays, lineality) or (inequalities, equations) pair from raw
/// double-description output.
fn canonical_pair(dim: usize, g: Generators) -> (Vec<IntVec>, Vec<IntVec>) {
    let lin = saturated_basis(&g.lineality, dim);
    let mut rays: Vec<IntVec> =
        g.rays.iter().map(|r| project_out(r, &lin)).filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    rays.sort();
    rays.dedup();
    (rays, lin)
}

impl Cone {
    /// The cone `cone(rays) + span(lineality)`.
    pub fn from_generators(ambient_dim: usize, rays: &[IntVec], lineality: &[IntVec]) -> Result<Cone> {
        check_lengths(ambient_dim, rays)?;
        check_lengths(ambient_dim, lineality)?;
        let dual = h_to_v(ambient_dim, rays, lineality);
        let (inequalities, equations) = canonical_pair(ambient_dim, dual);
        Ok(Cone::from_canonical_h(ambient_dim, inequalities, equations))
    }

    /// The cone `{x : a·x >= 0 for a in inequalities, e·x = 0 for e in equations}`.
    pub fn from_inequalities(ambient_dim: usize, inequalities: &[IntVec], equations: &[IntVec]) -> Result<Cone> {
        check_lengths(ambient_dim, inequalities)?;
        check_lengths(ambient_dim, equations)?;
        let primal = h_to_v(ambient_dim, inequalities, equations);
        let (rays, lineality) = canonical_pair(ambient_dim, primal);
        let dual = h_to_v(ambient_dim, &rays, &lineality);
        let (inequalities, equations) = canonical_pair(ambient_dim, dual);
        Ok(Cone { ambient_dim, rays, lineality, inequalities, equations })
    }

    fn from_canonical_h(ambient_dim: usize, inequalities: Vec<IntVec>, equations: Vec<IntVec>) -> Cone {
        let primal = h_to_v(ambient_dim, &inequalities, &equations);
        let (rays, lineality) = canonical_pair(ambient_dim, primal);
        Cone { ambient_dim, rays, lineality, inequalities, equations }
    }

    pub fn full_space(ambient_dim: usize) -> Cone {
        Cone::from_inequalities(ambient_dim, &[], &[]).expect("no constraints")
    }

    pub fn origin(ambient_dim: usize) -> Cone {
        Cone::from_generators(ambient_dim, &[], &[]).expect("no generators")
    }

    /// The linear subspace spanned by `basis`.
    pub fn linear_space(ambient_dim: usize, basis: &[IntVec]) -> Result<Cone> {
        Cone::from_generators(ambient_dim, &[], basis)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn lineality(&self) -> &[IntVec] {
        &self.lineality
    }

    pub fn inequalities(&self) -> &[IntVec] {
        &self.inequalities
    }

    pub fn equations(&self) -> &[IntVec] {
        &self.equations
    }

    pub fn ray_matrix(&self) -> IntegerMatrix {
        Matrix::from_columns(self.ambient_dim, &self.rays)
    }

    pub fn lineality_matrix(&self) -> IntegerMatrix {
        Matrix::from_columns(self.ambient_dim, &self.lineality)
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim - self.equations.len()
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    /// Generators of the linear span (rays followed by lineality).
    pub fn span_generators(&self) -> Vec<IntVec> {
        self.rays.iter().chain(&self.lineality).cloned().collect()
    }

    /// The saturated lattice `span(c) ∩ Z^n`.
    pub fn span_lattice(&self) -> Lattice {
        Lattice::saturated(self.ambient_dim, &self.span_generators())
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn is_linear(&self) -> bool {
        self.rays.is_empty()
    }

    /// Sum of the rays; zero for a linear space.
    pub fn relative_interior_point(&self) -> Vec<Rational> {
        to_rational(&self.interior_vector())
    }

    pub(crate) fn interior_vector(&self) -> IntVec {
        let mut p = vec![BigInt::zero(); self.ambient_dim];
        for r in &self.rays {
            for (a, b) in p.iter_mut().zip(r) {
                *a += b;
            }
        }
        p
    }

    pub fn contains(&self, w: &[Rational]) -> bool {
        debug_assert_eq!(w.len(), self.ambient_dim);
        let value = |a: &IntVec| a.iter().zip(w).fold(Rational::zero(), |acc, (x, y)| acc + y * x);
        self.equations.iter().all(|e| value(e).is_zero()) && self.inequalities.iter().all(|a| !value(a).is_negative())
    }

    pub(crate) fn contains_int(&self, w: &[BigInt]) -> bool {
        self.equations.iter().all(|e| dot(e, w).is_zero()) && self.inequalities.iter().all(|a| !dot(a, w).is_negative())
    }

    /// Whether `w` is in the relative interior.
    pub fn contains_in_relative_interior(&self, w: &[Rational]) -> bool {
        let value = |a: &IntVec| a.iter().zip(w).fold(Rational::zero(), |acc, (x, y)| acc + y * x);
        self.equations.iter().all(|e| value(e).is_zero()) && self.inequalities.iter().all(|a| value(a).is_positive())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains_int(r))
            && other.lineality.iter().all(|l| self.contains_int(l) && self.contains_int(&negate(l)))
    }

    pub fn intersection(&self, other: &Cone) -> Result<Cone> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        let ineqs: Vec<IntVec> = self.inequalities.iter().chain(&other.inequalities).cloned().collect();
        let eqs: Vec<IntVec> = self.equations.iter().chain(&other.equations).cloned().collect();
        Cone::from_inequalities(self.ambient_dim, &ineqs, &eqs)
    }

    /// Adds further constraints to the H-description.
    pub fn restrict(&self, inequalities: &[IntVec], equations: &[IntVec]) -> Result<Cone> {
        let ineqs: Vec<IntVec> = self.inequalities.iter().chain(inequalities).cloned().collect();
        let eqs: Vec<IntVec> = self.equations.iter().chain(equations).cloned().collect();
        Cone::from_inequalities(self.ambient_dim, &ineqs, &eqs)
    }

    /// The Minkowski sum `self + other`.
    pub fn sum(&self, other: &Cone) -> Result<Cone> {
        let rays: Vec<IntVec> = self.rays.iter().chain(&other.rays).cloned().collect();
        let lin: Vec<IntVec> = self.lineality.iter().chain(&other.lineality).cloned().collect();
        Cone::from_generators(self.ambient_dim, &rays, &lin)
    }

    /// The cone `{-x : x in self}`.
    pub fn negated(&self) -> Cone {
        let mut rays: Vec<IntVec> = self.rays.iter().map(|r| negate(r)).collect();
        rays.sort();
        let mut inequalities: Vec<IntVec> = self.inequalities.iter().map(|a| negate(a)).collect();
        inequalities.sort();
        // Lineality and equations describe subspaces; their HNF bases are unchanged.
        Cone { ambient_dim: self.ambient_dim, rays, lineality: self.lineality.clone(), inequalities, equations: self.equations.clone() }
    }

    /// Applies a linear map given on generators and rebuilds the cone.
    pub fn map_generators(&self, target_dim: usize, f: impl Fn(&IntVec) -> IntVec) -> Result<Cone> {
        let rays: Vec<IntVec> = self.rays.iter().map(&f).collect();
        let lin: Vec<IntVec> = self.lineality.iter().map(&f).collect();
        Cone::from_generators(target_dim, &rays, &lin)
    }

    /// Facets, each as the cone generated by the rays tight on one inequality.
    pub fn facets(&self) -> Vec<Cone> {
        let mut out: Vec<Cone> = self
            .inequalities
            .iter()
            .map(|a| {
                let tight: Vec<IntVec> = self.rays.iter().filter(|r| dot(a, r).is_zero()).cloned().collect();
                Cone::from_generators(self.ambient_dim, &tight, &self.lineality).expect("same ambient dimension")
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// All faces of codimension `codim`.
    pub fn faces(&self, codim: usize) -> Result<Vec<Cone>> {
        if codim > self.dim() {
            return Err(Error::BadCodim { codim, dim: self.dim() });
        }
        let mut level = vec![self.clone()];
        for _ in 0..codim {
            let mut next: Vec<Cone> = level.iter().flat_map(Cone::facets).collect();
            next.sort();
            next.dedup();
            level = next;
        }
        Ok(level)
    }

    /// Every face, including the cone itself, sorted by ascending dimension.
    pub fn all_faces(&self) -> Vec<Cone> {
        let mut out = Vec::new();
        let mut level = vec![self.clone()];
        while !level.is_empty() {
            let mut next: Vec<Cone> = level.iter().flat_map(Cone::facets).collect();
            next.sort();
            next.dedup();
            out.extend(level);
            level = next;
        }
        out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        out
    }

    /// The smallest face containing `other`, which must be a subset of `self`.
    pub fn smallest_face_containing(&self, other: &Cone) -> Cone {
        let p = other.interior_vector();
        let tight: Vec<&IntVec> = self.inequalities.iter().filter(|a| dot(a, &p).is_zero()).collect();
        let rays: Vec<IntVec> =
            self.rays.iter().filter(|r| tight.iter().all(|a| dot(a, r).is_zero())).cloned().collect();
        Cone::from_generators(self.ambient_dim, &rays, &self.lineality).expect("same ambient dimension")
    }

    /// Whether `other` is a face of `self`.
    pub fn has_face(&self, other: &Cone) -> bool {
        self.contains_cone(other) && self.smallest_face_containing(other) == *other
    }

    pub fn rank(&self) -> usize {
        rank_of(&self.span_generators(), self.ambient_dim)
    }
}

pub(crate) fn negate(v: &[BigInt]) -> IntVec {
    v.iter().map(|x| -x).collect()
}


impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |vs: &[IntVec]| -> String {
            let items: Vec<String> = vs
                .iter()
                .map(|v| format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                .collect();
            format!("[{}]", items.join(" "))
        };
        write!(f, "Cone(dim {}, rays {}, lineality {})", self.dim(), show(&self.rays), show(&self.lineality))
    }
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
    fn quadrant_descriptions() {
        let c = Cone::from_generators(2, &[iv(&[1, 0]), iv(&[0, 1])], &[]).unwrap();
        assert_eq!(c.inequalities(), &[iv(&[0, 1]), iv(&[1, 0])]);
        assert!(c.equations().is_empty());
        assert_eq!(c.dim(), 2);
        assert_eq!(c.relative_interior_point(), qv(&[1, 1]));
    }

    #[test]
    fn halfplane_from_inequality() {
        let c = Cone::from_inequalities(2, &[iv(&[1, 0])], &[]).unwrap();
        assert_eq!(c.rays(), &[iv(&[1, 0])]);
        assert_eq!(c.lineality(), &[iv(&[0, 1])]);
    }

    #[test]
    fn positive_hull_of_tropical_line_rays_is_plane() {
        let c = Cone::from_generators(2, &[iv(&[-1, -1]), iv(&[1, 0]), iv(&[0, 1])], &[]).unwrap();
        assert!(c.inequalities().is_empty());
        assert!(c.rays().is_empty());
        assert_eq!(c.lineality_dim(), 2);
        for w in [[1, 0], [-1, 0], [0, 1], [0, -1]] {
            assert!(c.contains(&qv(&w)));
        }
        assert_eq!(c, Cone::full_space(2));
    }

    #[test]
    fn round_trip_is_stable() {
        let c = Cone::from_generators(3, &[iv(&[1, 0, 1]), iv(&[0, 1, 1]), iv(&[0, 0, 1]), iv(&[1, 1, 3])], &[]).unwrap();
        assert_eq!(c.rays().len(), 3);
        let back = Cone::from_inequalities(3, c.inequalities(), c.equations()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn faces_of_small_cones() {
        let quadrant = Cone::from_generators(2, &[iv(&[1, 0]), iv(&[0, 1])], &[]).unwrap();
        let f = quadrant.faces(1).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|c| c.dim() == 1 && quadrant.contains_cone(c)));

        assert!(Cone::full_space(2).faces(1).unwrap().is_empty());
        assert_eq!(quadrant.faces(3), Err(Error::BadCodim { codim: 3, dim: 2 }));

        let tri = Cone::from_generators(3, &[iv(&[1, 0, 1]), iv(&[0, 1, 1]), iv(&[0, 0, 1])], &[]).unwrap();
        let facets = tri.faces(1).unwrap();
        assert_eq!(facets.len(), 3);
        assert!(facets.iter().all(|c| c.dim() == 2));
        assert_eq!(tri.faces(3).unwrap(), vec![Cone::origin(3)]);
    }

    #[test]
    fn interior_points() {
        let lin = Cone::linear_space(3, &[iv(&[1, 1, 1])]).unwrap();
        assert_eq!(lin.relative_interior_point(), qv(&[0, 0, 0]));
        let ray = Cone::from_generators(2, &[iv(&[-1, -1])], &[]).unwrap();
        assert_eq!(ray.relative_interior_point(), qv(&[-1, -1]));
    }

    #[test]
    fn intersections_and_faces() {
        let a = Cone::from_generators(2, &[iv(&[1, 0]), iv(&[0, 1])], &[]).unwrap();
        let b = Cone::from_generators(2, &[iv(&[1, 1]), iv(&[-1, 0])], &[]).unwrap();
        let i = a.intersection(&b).unwrap();
        assert_eq!(i.rays(), &[iv(&[0, 1]), iv(&[1, 1])]);
        assert!(!a.has_face(&i));
        let ray = Cone::from_generators(2, &[iv(&[0, 1])], &[]).unwrap();
        assert!(a.has_face(&ray));
    }

    #[test]
    fn negation_matches_rebuild() {
        let c = Cone::from_generators(3, &[iv(&[1, 2, 0]), iv(&[0, 1, 0])], &[iv(&[1, 1, 1])]).unwrap();
        let rebuilt =
            Cone::from_generators(3, &c.rays().iter().map(|r| negate(r)).collect::<Vec<_>>(), c.lineality()).unwrap();
        assert_eq!(c.negated(), rebuilt);
    }
}
