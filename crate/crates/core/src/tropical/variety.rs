use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::hypersurface::tropical_hypersurface;
use crate::convention::Convention;
use crate::cycles::{TropicalOutput, WeightedFan};
use crate::error::{Error, Result};
use crate::fans::Cone;
use crate::groebner::{
    groebner_fan, is_monomial_free, reduced_groebner_basis, saturate_by_variables, vector_space_dimension,
    GroebnerBasis, GroebnerCone, TermOrder,
};
use crate::linalg::lattice::{saturated_basis, unit, IntVec};
use crate::linalg::{hermite_normal_form, inverse, Matrix};
use crate::poly::{IdealSpec, Monomial, Polynomial, Variables};
use crate::scalar::Field;
use crate::Rational;

/// How `tropical_variety` chooses its algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Principal ideals go through the Newton polytope, everything else
    /// through the Gröbner fan.
    #[default]
    Auto,
    /// Always enumerate the Gröbner fan of the homogenized ideal.
    GroebnerFan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarietyOptions {
    /// Accepted for callers that know the ideal is prime; both values run
    /// the same exhaustive algorithm.
    pub prime: bool,
    pub strategy: Strategy,
    pub convention: Convention,
}

impl Default for VarietyOptions {
    fn default() -> Self {
        VarietyOptions { prime: true, strategy: Strategy::Auto, convention: Convention::Min }
    }
}

/// Gröbner fan of the homogenized ideal with every face classified.
pub(crate) struct Analysis<F> {
    pub cones: Vec<GroebnerCone<F>>,
    /// Face of some maximal cone, mapped to (in the tropical variety, owner).
    pub faces: BTreeMap<Cone, (bool, usize)>,
}

impl<F: Field> Analysis<F> {
    pub fn run(homogenized: &IdealSpec<F>) -> Result<Analysis<F>> {
        let cones = groebner_fan(homogenized)?;
        let mut owners: BTreeMap<Cone, usize> = BTreeMap::new();
        for (k, gc) in cones.iter().enumerate() {
            for face in gc.cone.all_faces() {
                owners.entry(face).or_insert(k);
            }
        }
        let mut order: Vec<(Cone, usize)> = owners.into_iter().collect();
        order.sort_by(|a, b| a.0.dim().cmp(&b.0.dim()).then_with(|| a.0.cmp(&b.0)));
        let mut faces: BTreeMap<Cone, (bool, usize)> = BTreeMap::new();
        for (face, owner) in order {
            // The variety is closed, so a face with an excluded facet is excluded.
            let facets_ok = face.facets().iter().all(|f| faces.get(f).map_or(true, |s| s.0));
            let keep = facets_ok && {
                let w = face.relative_interior_point();
                is_monomial_free(&cones[owner].basis.initial_ideal(&w)?)?
            };
            faces.insert(face, (keep, owner));
        }
        Ok(Analysis { cones, faces })
    }

    /// Kept faces not contained in a larger kept face.
    pub fn maximal_kept(&self) -> Vec<(&Cone, usize)> {
        let covered: BTreeSet<Cone> =
            self.faces.iter().filter(|(_, s)| s.0).flat_map(|(c, _)| c.facets()).collect();
        self.faces.iter().filter(|(c, s)| s.0 && !covered.contains(*c)).map(|(c, s)| (c, s.1)).collect()
    }
}

/// Intersects a cone of the homogenized fan with `w_0 = 0` and drops the
/// first coordinate.
pub(crate) fn slice(cone: &Cone) -> Result<Cone> {
    let n = cone.ambient_dim();
    let cut = cone.restrict(&[], &[unit(n, 0)])?;
    cut.map_generators(n - 1, |v| v[1..].to_vec())
}

/// Proper nonzero ideal with zero generators removed.
pub(crate) fn checked_ideal<F: Field>(ideal: &IdealSpec<F>) -> Result<IdealSpec<F>> {
    let ideal = ideal.without_zeros()?;
    if reduced_groebner_basis(&ideal, &TermOrder::grevlex())?.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(ideal)
}

/// Tropical variety with multiplicities on its maximal cells.
///
/// Returns a cycle when the result is pure and a weighted fan otherwise.
/// An ideal with no zeros in the torus gives the empty fan.
pub fn tropical_variety<F: Field>(ideal: &IdealSpec<F>, options: &VarietyOptions) -> Result<TropicalOutput> {
    let ideal = checked_ideal(ideal)?;
    let n = ideal.nvars();
    let min = if options.strategy == Strategy::Auto && ideal.generators().len() == 1 {
        let f = &ideal.generators()[0];
        if f.is_monomial() {
            TropicalOutput::classify(WeightedFan::empty(n, Convention::Min))
        } else {
            TropicalOutput::Cycle(tropical_hypersurface(f, Convention::Min)?)
        }
    } else {
        let analysis = Analysis::run(&ideal.homogenize())?;
        let mut cells = Vec::new();
        for (face, owner) in analysis.maximal_kept() {
            let m = multiplicity_with(&analysis.cones[owner].basis, face)?;
            cells.push((slice(face)?, m));
        }
        TropicalOutput::classify(WeightedFan::from_weighted_cones(n, cells, Convention::Min)?)
    };
    Ok(match options.convention {
        Convention::Min => min,
        Convention::Max => min.swap_convention(),
    })
}

/// Multiplicity of a maximal cell `sigma` of the tropical variety of a
/// homogeneous ideal, in the min convention.
pub fn multiplicity_at<F: Field>(ideal: &IdealSpec<F>, sigma: &Cone) -> Result<u64> {
    if !ideal.is_homogeneous() {
        return Err(Error::RequiresHomogeneous);
    }
    if sigma.ambient_dim() != ideal.nvars() {
        return Err(Error::DimMismatch { expected: ideal.nvars(), found: sigma.ambient_dim() });
    }
    let w = sigma.relative_interior_point();
    let gb = reduced_groebner_basis(ideal, &TermOrder::weight(w, Convention::Min))?;
    multiplicity_with(&gb, sigma)
}

/// `gb` must be a basis whose closed Gröbner cone contains `sigma`.
fn multiplicity_with<F: Field>(gb: &GroebnerBasis<F>, sigma: &Cone) -> Result<u64> {
    let n = sigma.ambient_dim();
    let initial = gb.initial_ideal(&sigma.relative_interior_point())?;
    let basis = saturated_basis(&sigma.span_generators(), n);
    let d = basis.len();
    if d == n {
        return Err(Error::NotZeroDimensional);
    }
    // Complete the span lattice to a basis of Z^n: with B^T U = [L | 0],
    // the first d rows of U^{-1} span the same gradings as B^T.
    let (_, u) = hermite_normal_form(&Matrix::from_rows(n, &basis));
    let a = inverse(&u.map(|x| Rational::from_integer(x.clone()))).expect("unimodular");
    let a = a.map(|x| x.to_integer());

    let vars = Variables::unchecked((0..n - d).map(|i| format!("z{i}")).collect());
    let mut gens = Vec::new();
    for g in initial.generators() {
        let images: Vec<(IntVec, F)> = g
            .terms()
            .map(|(m, c)| {
                let e: IntVec = m.0.iter().map(|&x| BigInt::from(x)).collect();
                (a.mul_vec(&e)[d..].to_vec(), c.clone())
            })
            .collect();
        let mut low = images[0].0.clone();
        for (e, _) in &images {
            for (l, x) in low.iter_mut().zip(e) {
                if x < l {
                    *l = x.clone();
                }
            }
        }
        let terms = images
            .into_iter()
            .map(|(e, c)| {
                let exps = e
                    .iter()
                    .zip(&low)
                    .map(|(x, l)| (x - l).to_u32().ok_or_else(|| Error::Overflow("exponent".into())))
                    .collect::<Result<Vec<u32>>>()?;
                Ok((Monomial(exps), c))
            })
            .collect::<Result<Vec<_>>>()?;
        gens.push(Polynomial::from_terms(vars.clone(), terms));
    }
    debug_assert!(gens.iter().all(|g| !g.is_zero()));
    let reduced = IdealSpec::new(vars, gens)?;
    let count = vector_space_dimension(&saturate_by_variables(&reduced)?)?;
    if count.is_zero() {
        // The cell is not in the variety.
        return Err(Error::NotZeroDimensional);
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_ideal;

    fn iv(v: &[i64]) -> IntVec {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn via_fan() -> VarietyOptions {
        VarietyOptions { strategy: Strategy::GroebnerFan, ..VarietyOptions::default() }
    }

    #[test]
    fn tropical_line_by_both_paths() {
        let i = parse_ideal(&["x+y+1"], &["x", "y"]).unwrap();
        let fast = tropical_variety(&i, &VarietyOptions::default()).unwrap();
        let slow = tropical_variety(&i, &via_fan()).unwrap();
        assert_eq!(fast, slow);
        assert_eq!(slow.fan().rays(), &[iv(&[-1, -1]), iv(&[0, 1]), iv(&[1, 0])]);
        assert_eq!(slow.multiplicities(), &[1, 1, 1]);
        assert!(slow.as_cycle().is_some());
    }

    #[test]
    fn binomial_is_a_line() {
        let i = parse_ideal(&["x*y-1"], &["x", "y"]).unwrap();
        let v = tropical_variety(&i, &via_fan()).unwrap();
        assert_eq!(v.fan().lineality(), &[iv(&[1, -1])]);
        assert!(v.fan().rays().is_empty());
        assert_eq!(v.multiplicities(), &[1]);
        assert_eq!(v, tropical_variety(&i, &VarietyOptions::default()).unwrap());
    }

    #[test]
    fn line_and_conic() {
        let i = parse_ideal(&["x+y+z", "x^2+y^2+z^2"], &["x", "y", "z"]).unwrap();
        let v = tropical_variety(&i, &VarietyOptions::default()).unwrap();
        assert_eq!(v.dim(), 1);
        assert_eq!(v.fan().lineality(), &[iv(&[1, 1, 1])]);
        assert!(v.fan().rays().is_empty());
        assert_eq!(v.multiplicities(), &[2]);
    }

    #[test]
    fn multiplicity_of_a_dilated_hypersurface() {
        let j = parse_ideal(&["x^2+y^2+z^2"], &["x", "y", "z"]).unwrap();
        let sigma = Cone::from_generators(3, &[iv(&[0, 0, 1])], &[iv(&[1, 1, 1])]).unwrap();
        assert_eq!(multiplicity_at(&j, &sigma).unwrap(), 2);
        let j = parse_ideal(&["x+y+h"], &["x", "y", "h"]).unwrap();
        assert_eq!(multiplicity_at(&j, &sigma).unwrap(), 1);
    }

    #[test]
    fn degenerate_ideals() {
        let unit_ideal = parse_ideal(&["x", "x+1"], &["x", "y"]).unwrap();
        assert_eq!(tropical_variety(&unit_ideal, &VarietyOptions::default()), Err(Error::UnitIdeal));
        let zero = parse_ideal(&["0"], &["x"]).unwrap();
        assert_eq!(tropical_variety(&zero, &VarietyOptions::default()), Err(Error::ZeroIdeal));
        let empty = parse_ideal(&["x*y", "x+y+1"], &["x", "y"]).unwrap();
        let v = tropical_variety(&empty, &VarietyOptions::default()).unwrap();
        assert!(v.fan().is_empty());
        let monomial = parse_ideal(&["x^2*y"], &["x", "y"]).unwrap();
        assert!(tropical_variety(&monomial, &VarietyOptions::default()).unwrap().fan().is_empty());
    }

    #[test]
    fn max_convention_negates() {
        let i = parse_ideal(&["x+y+1"], &["x", "y"]).unwrap();
        let max = tropical_variety(&i, &VarietyOptions { convention: Convention::Max, ..via_fan() }).unwrap();
        assert_eq!(max.convention(), Convention::Max);
        assert_eq!(max.fan().rays(), &[iv(&[-1, 0]), iv(&[0, -1]), iv(&[1, 1])]);
    }
}
