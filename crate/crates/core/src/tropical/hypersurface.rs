use num_bigint::BigInt;

use crate::convention::Convention;
use crate::cycles::{TropicalCycle, WeightedFan};
use crate::error::{Error, Result};
use crate::fans::{Cone, Fan};
use crate::linalg::lattice::IntVec;
use crate::poly::{newton_polytope, Polynomial};
use crate::scalar::Field;
use crate::Rational;

/// `min` (or `max`) of `w·u` over the support of `f`.
pub fn tropical_evaluate<F: Field>(f: &Polynomial<F>, w: &[Rational], convention: Convention) -> Result<Rational> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if w.len() != f.nvars() {
        return Err(Error::DimMismatch { expected: f.nvars(), found: w.len() });
    }
    let values = f.terms().map(|(m, _)| m.weight(w));
    let best = match convention {
        Convention::Min => values.min(),
        Convention::Max => values.max(),
    };
    Ok(best.expect("nonzero polynomial"))
}

fn exps(m: &crate::poly::Monomial) -> IntVec {
    m.0.iter().map(|&e| BigInt::from(e)).collect()
}

/// Codimension-one skeleton of the normal fan of the Newton polytope,
/// weighted by lattice edge lengths.
pub fn tropical_hypersurface<F: Field>(f: &Polynomial<F>, convention: Convention) -> Result<TropicalCycle> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_monomial() {
        return Err(Error::MonomialHypersurfaceEmpty);
    }
    let n = f.nvars();
    let vertices: Vec<IntVec> = newton_polytope(f)?.iter().map(exps).collect();
    let mut cells = Vec::new();
    for (i, p) in vertices.iter().enumerate() {
        for q in &vertices[i + 1..] {
            let edge: IntVec = q.iter().zip(p).map(|(a, b)| a - b).collect();
            let ineqs: Vec<IntVec> =
                vertices.iter().map(|r| r.iter().zip(p).map(|(a, b)| a - b).collect()).collect();
            let cone = Cone::from_inequalities(n, &ineqs, std::slice::from_ref(&edge))?;
            if cone.dim() + 1 == n {
                let length = edge.iter().fold(BigInt::from(0), |g, x| num_integer::Integer::gcd(&g, x));
                let m = u64::try_from(length).map_err(|_| Error::Overflow("edge length".into()))?;
                cells.push((cone, m));
            }
        }
    }
    let min = TropicalCycle::new(WeightedFan::from_weighted_cones(n, cells, Convention::Min)?)?;
    Ok(match convention {
        Convention::Min => min,
        Convention::Max => min.swap_convention(),
    })
}

/// Common refinement of the hypersurfaces of all polynomials.
pub fn tropical_prevariety<F: Field>(polys: &[Polynomial<F>], convention: Convention) -> Result<Fan> {
    let Some(first) = polys.first() else {
        return Err(Error::ZeroIdeal);
    };
    let n = first.nvars();
    let mut acc: Option<Fan> = None;
    for f in polys {
        if f.nvars() != n {
            return Err(Error::DimMismatch { expected: n, found: f.nvars() });
        }
        let h = tropical_hypersurface(f, Convention::Min)?;
        acc = Some(match acc {
            None => h.fan().clone(),
            Some(a) => a.common_refinement(h.fan())?,
        });
    }
    let fan = acc.expect("at least one polynomial");
    Ok(match convention {
        Convention::Min => fan,
        Convention::Max => fan.negated(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    fn iv(v: &[i64]) -> IntVec {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn evaluation() {
        let f = parse_polynomial("x+y+1", &["x", "y"]).unwrap();
        assert_eq!(tropical_evaluate(&f, &q(&[2, 3]), Convention::Min).unwrap(), q(&[0])[0]);
        assert_eq!(tropical_evaluate(&f, &q(&[-1, -4]), Convention::Min).unwrap(), q(&[-4])[0]);
        let x = parse_polynomial("x", &["x"]).unwrap();
        assert_eq!(tropical_evaluate(&x, &q(&[3]), Convention::Max).unwrap(), q(&[3])[0]);
        assert!(matches!(tropical_evaluate(&f, &q(&[1]), Convention::Min), Err(Error::DimMismatch { .. })));
    }

    #[test]
    fn tropical_line() {
        let f = parse_polynomial("x+y+1", &["x", "y"]).unwrap();
        let h = tropical_hypersurface(&f, Convention::Min).unwrap();
        assert_eq!(h.fan().rays(), &[iv(&[-1, -1]), iv(&[0, 1]), iv(&[1, 0])]);
        assert_eq!(h.multiplicities(), &[1, 1, 1]);
        assert_eq!(h.dim(), 1);
    }

    #[test]
    fn quadric_has_weight_two() {
        let vars = ["x", "y", "z"];
        let quad = tropical_hypersurface(&parse_polynomial("x^2+y^2+z^2", &vars).unwrap(), Convention::Min).unwrap();
        let lin = tropical_hypersurface(&parse_polynomial("x+y+z", &vars).unwrap(), Convention::Min).unwrap();
        assert_eq!(quad.multiplicities(), &[2, 2, 2]);
        assert_eq!(lin.multiplicities(), &[1, 1, 1]);
        assert_eq!(quad.fan(), lin.fan());
        assert_eq!(quad.fan().lineality(), &[iv(&[1, 1, 1])]);
        assert_eq!(quad.dim(), 2);
    }

    #[test]
    fn monomials_are_rejected() {
        let f = parse_polynomial("x*y", &["x", "y"]).unwrap();
        assert_eq!(tropical_hypersurface(&f, Convention::Min), Err(Error::MonomialHypersurfaceEmpty));
    }

    #[test]
    fn max_is_the_negation() {
        let f = parse_polynomial("x+y+1", &["x", "y"]).unwrap();
        let max = tropical_hypersurface(&f, Convention::Max).unwrap();
        assert_eq!(max, tropical_hypersurface(&f, Convention::Min).unwrap().swap_convention());
        assert_eq!(max.fan().rays(), &[iv(&[-1, 0]), iv(&[0, -1]), iv(&[1, 1])]);
    }

    #[test]
    fn prevarieties() {
        let vars = ["x", "y", "z"];
        let gens = [parse_polynomial("x+y+z", &vars).unwrap(), parse_polynomial("x^2+y^2+z^2", &vars).unwrap()];
        assert_eq!(tropical_prevariety(&gens, Convention::Min).unwrap().dim(), 2);

        let line = [parse_polynomial("x+y+1", &["x", "y"]).unwrap()];
        let h = tropical_hypersurface(&line[0], Convention::Min).unwrap();
        assert_eq!(&tropical_prevariety(&line, Convention::Min).unwrap(), h.fan());

        let two = [parse_polynomial("x+y", &["x", "y"]).unwrap(), parse_polynomial("x+2*y", &["x", "y"]).unwrap()];
        let p = tropical_prevariety(&two, Convention::Min).unwrap();
        assert_eq!(p.dim(), 1);
        assert_eq!(p.lineality(), &[iv(&[1, 1])]);
    }
}
