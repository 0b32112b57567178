//! Enumeration of the Gröbner fan of a homogeneous ideal by facet crossing.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;

use super::buchberger::{reduced_groebner_basis, GroebnerBasis};
use super::order::TermOrder;
use crate::convention::Convention;
use crate::error::{Error, Result};
use crate::fans::Cone;
use crate::linalg::lattice::IntVec;
use crate::poly::IdealSpec;
use crate::scalar::Field;

/// A maximal cone of the Gröbner fan with its reduced basis.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerCone<F = crate::Rational> {
    pub basis: GroebnerBasis<F>,
    pub cone: Cone,
}

fn exps(m: &crate::poly::Monomial) -> IntVec {
    m.0.iter().map(|&e| BigInt::from(e)).collect()
}

/// The closed Gröbner cone of `gb` in the min convention:
/// `w·u0 <= w·u` for every leading exponent `u0` and trailing exponent `u`.
pub fn groebner_cone<F: Field>(gb: &GroebnerBasis<F>) -> Cone {
    let n = gb.vars().len();
    let mut rows: Vec<IntVec> = Vec::new();
    for (g, lm) in gb.elements().iter().zip(gb.leading_monomials()) {
        let u0 = exps(lm);
        for (m, _) in g.terms() {
            if m != lm {
                rows.push(exps(m).iter().zip(&u0).map(|(a, b)| a - b).collect());
            }
        }
    }
    rows.sort();
    rows.dedup();
    Cone::from_inequalities(n, &rows, &[]).expect("rows have the ring's length")
}

/// All maximal cones of the Gröbner fan, in discovery order.
pub fn groebner_fan<F: Field>(ideal: &IdealSpec<F>) -> Result<Vec<GroebnerCone<F>>> {
    if !ideal.is_homogeneous() {
        return Err(Error::RequiresHomogeneous);
    }
    let start = reduced_groebner_basis(ideal, &TermOrder::grevlex())?;
    let mut found: Vec<GroebnerCone<F>> = Vec::new();
    let mut keys = BTreeSet::new();
    let mut facet_count: BTreeMap<Cone, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();

    let mut admit = |gb: GroebnerBasis<F>,
                     found: &mut Vec<GroebnerCone<F>>,
                     facet_count: &mut BTreeMap<Cone, usize>,
                     queue: &mut VecDeque<usize>| {
        if !keys.insert(gb.cone_key()) {
            return;
        }
        let cone = groebner_cone(&gb);
        for f in cone.facets() {
            *facet_count.entry(f).or_insert(0) += 1;
        }
        queue.push_back(found.len());
        found.push(GroebnerCone { basis: gb, cone });
    };

    admit(start, &mut found, &mut facet_count, &mut queue);
    while let Some(k) = queue.pop_front() {
        let cone = found[k].cone.clone();
        for (facet, normal) in facets_with_normals(&cone) {
            if facet_count.get(&facet).copied().unwrap_or(0) >= 2 {
                continue;
            }
            let p = facet.interior_vector();
            let away: IntVec = normal.iter().map(|x| -x).collect();
            let order = TermOrder::from_int_rows(&[p, away], Convention::Min);
            let gb = reduced_groebner_basis(ideal, &order)?;
            admit(gb, &mut found, &mut facet_count, &mut queue);
        }
    }
    Ok(found)
}

/// Facets paired with their inward normals.
fn facets_with_normals(cone: &Cone) -> Vec<(Cone, IntVec)> {
    cone.inequalities()
        .iter()
        .map(|a| {
            let facet = cone.restrict(&[], std::slice::from_ref(a)).expect("same ambient dimension");
            (facet, a.clone())
        })
        .collect()
}
