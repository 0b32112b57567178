//! Double description: from `{x : A x >= 0, E x = 0}` to generators.
//!
//! Constraints are inserted one at a time starting from the whole space.
//! While a constraint is not identically zero on the current lineality
//! space it cuts the lineality down by one dimension; afterwards the classic
//! ray update runs, with adjacency decided combinatorially from the sets of
//! tight constraints.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::lattice::{unit, IntVec};
use crate::linalg::{dot, primitive_vector};

#[derive(Debug, Clone, Default)]
pub(crate) struct Generators {
    pub rays: Vec<IntVec>,
    pub lineality: Vec<IntVec>,
}

fn combine(s: &BigInt, v: &[BigInt], t: &BigInt, w: &[BigInt]) -> IntVec {
    // s*v - t*w, made primitive
    let raw: IntVec = v.iter().zip(w).map(|(a, b)| s * a - t * b).collect();
    primitive_vector(&raw).unwrap_or(raw)
}

struct Bits(Vec<u64>);

impl Bits {
    fn from_fn(len: usize, f: impl Fn(usize) -> bool) -> Self {
        let mut words = vec![0u64; len.div_ceil(64)];
        for i in 0..len {
            if f(i) {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        Bits(words)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_superset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

pub(crate) fn h_to_v(dim: usize, inequalities: &[IntVec], equations: &[IntVec]) -> Generators {
    let mut lineality: Vec<IntVec> = (0..dim).map(|i| unit(dim, i)).collect();
    let mut rays: Vec<IntVec> = Vec::new();
    let mut inserted: Vec<IntVec> = Vec::new();

    let constraints = equations.iter().map(|e| (e, true)).chain(inequalities.iter().map(|a| (a, false)));
    for (a, is_equation) in constraints {
        debug_assert_eq!(a.len(), dim);
        if a.iter().all(Zero::is_zero) {
            continue;
        }
        if let Some(k) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lineality.remove(k);
            let mut s0 = dot(a, &l0);
            if s0.is_negative() {
                l0 = l0.iter().map(|x| -x).collect();
                s0 = -s0;
            }
            for l in lineality.iter_mut() {
                let t = dot(a, l);
                if !t.is_zero() {
                    *l = combine(&s0, l, &t, &l0);
                }
            }
            for r in rays.iter_mut() {
                let t = dot(a, r);
                if !t.is_zero() {
                    *r = combine(&s0, r, &t, &l0);
                }
            }
            if !is_equation {
                rays.push(l0);
            }
            inserted.push(a.clone());
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| dot(a, r)).collect();
        let zero_sets: Vec<Bits> =
            rays.iter().map(|r| Bits::from_fn(inserted.len(), |i| dot(&inserted[i], r).is_zero())).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();

        let mut next: Vec<IntVec> = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            if values[i].is_zero() || (!is_equation && values[i].is_positive()) {
                next.push(r.clone());
            }
        }
        for &p in &pos {
            for &n in &neg {
                let common = zero_sets[p].and(&zero_sets[n]);
                let adjacent = (0..rays.len()).all(|r| r == p || r == n || !zero_sets[r].is_superset_of(&common));
                if adjacent {
                    // (a·p) n - (a·n) p lies on the hyperplane a·x = 0.
                    next.push(combine(&values[p], &rays[n], &values[n], &rays[p]));
                }
            }
        }
        next.sort();
        next.dedup();
        rays = next;
        inserted.push(a.clone());
    }
    Generators { rays, lineality }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVec {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn positive_orthant() {
        let g = h_to_v(3, &[iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1])], &[]);
        assert!(g.lineality.is_empty());
        let mut rays = g.rays;
        rays.sort();
        assert_eq!(rays, vec![iv(&[0, 0, 1]), iv(&[0, 1, 0]), iv(&[1, 0, 0])]);
    }

    #[test]
    fn cone_over_square() {
        // x ± y >= 0... the cone over a square has four extreme rays.
        let ineqs = [iv(&[1, 0, 1]), iv(&[-1, 0, 1]), iv(&[0, 1, 1]), iv(&[0, -1, 1])];
        let g = h_to_v(3, &ineqs, &[]);
        assert_eq!(g.rays.len(), 4);
        assert!(g.lineality.is_empty());
    }

    #[test]
    fn halfspace_keeps_lineality() {
        let g = h_to_v(2, &[iv(&[1, 0])], &[]);
        assert_eq!(g.rays, vec![iv(&[1, 0])]);
        assert_eq!(g.lineality.len(), 1);
    }

    #[test]
    fn equations_cut_dimension() {
        let g = h_to_v(3, &[iv(&[1, 0, 0])], &[iv(&[1, -1, 0])]);
        // {x = y, x >= 0}: ray (1,1,0) plus the z-axis.
        assert_eq!(g.rays.len(), 1);
        assert_eq!(g.lineality.len(), 1);
    }
}
