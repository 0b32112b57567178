use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{TropicalCycle, WeightedFan};
use crate::fans::Cone;
use crate::linalg::lattice::{integer_kernel, saturated_basis, to_rational, IntVec};
use crate::linalg::{dot, extended_gcd, solve, Matrix};
use crate::Rational;

/// Coordinates of `v` in the basis given by `basis` columns.
fn coordinates(basis: &[IntVec], v: &[BigInt]) -> Vec<Rational> {
    let dim = v.len();
    let b = Matrix::from_columns(dim, basis).map(|x| Rational::from_integer(x.clone()));
    solve(&b, &to_rational(v)).expect("vector lies in the span of the basis")
}

fn integral(v: &[Rational]) -> IntVec {
    v.iter()
        .map(|x| {
            assert!(x.is_integer(), "saturated sublattice has integral coordinates");
            x.to_integer()
        })
        .collect()
}

/// An integer `y` with `phi·y = 1`; `phi` must be primitive.
fn unimodular_preimage(phi: &[BigInt]) -> IntVec {
    let mut y: IntVec = vec![BigInt::zero(); phi.len()];
    let mut g = BigInt::zero();
    for (i, p) in phi.iter().enumerate() {
        let (d, s, t) = extended_gcd(&g, p);
        for yj in y.iter_mut().take(i) {
            *yj *= &s;
        }
        y[i] = t;
        g = d;
    }
    if g.is_negative() {
        y.iter_mut().for_each(|x| *x = -&*x);
    }
    debug_assert!(dot(phi, &y).is_one());
    y
}

/// Lattice normal vector of `sigma` relative to its facet `tau`,
/// pointing into `sigma`.
pub(crate) fn lattice_normal(sigma: &Cone, tau: &Cone) -> IntVec {
    let n = sigma.ambient_dim();
    let bs = saturated_basis(&sigma.span_generators(), n);
    let bt = saturated_basis(&tau.span_generators(), n);
    // Rows of T^T: the facet lattice written in the cone's coordinates.
    let t_rows: Vec<IntVec> = bt.iter().map(|v| integral(&coordinates(&bs, v))).collect();
    let kernel = integer_kernel(&t_rows, bs.len());
    debug_assert_eq!(kernel.len(), 1);
    let phi = &kernel[0];
    let y = unimodular_preimage(phi);
    let mut u: IntVec = vec![BigInt::zero(); n];
    for (b, c) in bs.iter().zip(&y) {
        for (ui, bi) in u.iter_mut().zip(b) {
            *ui += bi * c;
        }
    }
    let inside = integral(&coordinates(&bs, &sigma.interior_vector()));
    if dot(phi, &inside).is_negative() {
        u.iter_mut().for_each(|x| *x = -&*x);
    }
    u
}

pub(crate) fn balanced(wf: &WeightedFan) -> bool {
    let d = wf.dim();
    if d <= 0 {
        return true;
    }
    for tau in wf.fan().cones_of_dim(d as usize - 1) {
        let mut sum: IntVec = vec![BigInt::zero(); wf.ambient_dim()];
        for (sigma, m) in wf.weighted_cones() {
            if sigma.dim() as i64 != d || !sigma.contains_cone(&tau) {
                continue;
            }
            let u = lattice_normal(sigma, &tau);
            for (s, x) in sum.iter_mut().zip(&u) {
                *s += x * BigInt::from(m);
            }
        }
        if tau.equations().iter().any(|e| !dot(e, &sum).is_zero()) {
            return false;
        }
    }
    true
}

/// Whether the weighted normal vectors around every codimension-one face
/// sum into the span of that face.
pub fn is_balanced(cycle: &TropicalCycle) -> bool {
    balanced(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convention::Convention;
    use crate::cycles::make_cycle;
    use crate::fans::Fan;

    fn iv(v: &[i64]) -> IntVec {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn line(mults: &[u64]) -> TropicalCycle {
        let fan = Fan::from_index_sets(2, &[iv(&[-1, -1]), iv(&[1, 0]), iv(&[0, 1])], &[], &[vec![0], vec![1], vec![2]])
            .unwrap();
        make_cycle(fan, mults, Convention::Min).unwrap()
    }

    #[test]
    fn tropical_line() {
        assert!(is_balanced(&line(&[1, 1, 1])));
        assert!(!is_balanced(&line(&[2, 1, 1])));
        assert!(is_balanced(&line(&[1, 1, 1]).swap_convention()));
    }

    #[test]
    fn linear_space_has_no_codim_one_faces() {
        let fan = Fan::from_cones(3, [Cone::linear_space(3, &[iv(&[1, 1, 1])]).unwrap()]).unwrap();
        assert!(is_balanced(&make_cycle(fan.clone(), &[5], Convention::Min).unwrap()));
    }

    #[test]
    fn normals_use_the_quotient_lattice() {
        // Cone spanned by (1,0) and (1,2) over its facet ray (1,0): the
        // quotient generator is (0,1) modulo (1,0), not (1,2).
        let sigma = Cone::from_generators(2, &[iv(&[1, 0]), iv(&[1, 2])], &[]).unwrap();
        let tau = Cone::from_generators(2, &[iv(&[1, 0])], &[]).unwrap();
        let u = lattice_normal(&sigma, &tau);
        assert_eq!(u[1], BigInt::from(1));
    }

    #[test]
    fn subdivision_keeps_balance() {
        let rays = [iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1]), iv(&[-1, -1, -1])];
        let cones: Vec<Vec<usize>> = vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]];
        let plane = Fan::from_index_sets(3, &rays, &[], &cones).unwrap();
        let c = make_cycle(plane.clone(), &[1; 6], Convention::Min).unwrap();
        assert!(is_balanced(&c));

        let split_ray = iv(&[1, 1, 0]);
        let mut pieces: Vec<Cone> = plane
            .cones()
            .iter()
            .filter(|c| !(c.rays().contains(&rays[0]) && c.rays().contains(&rays[1])))
            .cloned()
            .collect();
        pieces.push(Cone::from_generators(3, &[rays[0].clone(), split_ray.clone()], &[]).unwrap());
        pieces.push(Cone::from_generators(3, &[split_ray, rays[1].clone()], &[]).unwrap());
        let fine = Fan::from_cones(3, pieces).unwrap();
        let c = make_cycle(fine, &[1; 7], Convention::Min).unwrap();
        assert!(is_balanced(&c));
    }
}
