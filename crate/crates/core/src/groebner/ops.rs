//! Ideal operations built on reduced Gröbner bases.

use super::buchberger::{reduced_groebner_basis, GroebnerBasis};
use super::order::TermOrder;
use crate::convention::Convention;
use crate::error::{Error, Result};
use crate::poly::{IdealSpec, Monomial, Polynomial, Variables};
use crate::scalar::Field;
use crate::Rational;

fn unit_weight(n: usize, i: usize, value: i64) -> Vec<Rational> {
    (0..n).map(|j| Rational::from_integer(if i == j { value.into() } else { 0.into() })).collect()
}

/// `(I : f^∞)`, by eliminating `t` from `I + <t*f - 1>`.
pub fn saturate<F: Field>(ideal: &IdealSpec<F>, f: &Polynomial<F>) -> Result<IdealSpec<F>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.vars() != ideal.vars() {
        return Err(Error::DimMismatch { expected: ideal.nvars(), found: f.nvars() });
    }
    let n = ideal.nvars();
    let mut names = ideal.vars().names().to_vec();
    names.push(ideal.vars().fresh_name("t"));
    let ext = Variables::unchecked(names);
    let lift = |p: &Polynomial<F>| {
        p.map_monomials(ext.clone(), |m| {
            let mut e = m.0.clone();
            e.push(0);
            Monomial(e)
        })
    };
    let mut gens: Vec<Polynomial<F>> = ideal.generators().iter().map(lift).collect();
    let t = Polynomial::variable(ext.clone(), n);
    gens.push(t.mul(&lift(f)).sub(&Polynomial::constant(ext.clone(), F::one())));
    // Any power of t outweighs everything else.
    let order = TermOrder::weight(unit_weight(n + 1, n, 1), Convention::Max);
    let gb = reduced_groebner_basis(&IdealSpec::new(ext, gens)?, &order)?;
    let kept: Vec<Polynomial<F>> = gb
        .elements()
        .iter()
        .filter(|g| g.terms().all(|(m, _)| m.0[n] == 0))
        .map(|g| {
            g.map_monomials(ideal.vars().clone(), |m| Monomial(m.0[..n].to_vec()))
        })
        .collect();
    let kept = if kept.is_empty() { vec![Polynomial::zero(ideal.vars().clone())] } else { kept };
    IdealSpec::new(ideal.vars().clone(), kept)
}

/// `(I : x_i^∞)` for homogeneous `I`: reverse-lex with `x_i` last, then
/// divide every basis element by its largest power of `x_i`.
fn saturate_homogeneous_by_variable<F: Field>(ideal: &IdealSpec<F>, i: usize) -> Result<IdealSpec<F>> {
    let n = ideal.nvars();
    let degree_row = vec![Rational::from_integer(1.into()); n];
    let order = TermOrder::new(vec![degree_row, unit_weight(n, i, -1)], Convention::Max);
    let gb = reduced_groebner_basis(ideal, &order)?;
    let gens: Vec<Polynomial<F>> = gb
        .elements()
        .iter()
        .map(|g| {
            let k = g.terms().map(|(m, _)| m.0[i]).min().unwrap_or(0);
            g.map_monomials(ideal.vars().clone(), |m| {
                let mut e = m.0.clone();
                e[i] -= k;
                Monomial(e)
            })
        })
        .collect();
    let gens = if gens.is_empty() { vec![Polynomial::zero(ideal.vars().clone())] } else { gens };
    IdealSpec::new(ideal.vars().clone(), gens)
}

/// `(I : (x_1 ⋯ x_n)^∞)`.
pub fn saturate_by_variables<F: Field>(ideal: &IdealSpec<F>) -> Result<IdealSpec<F>> {
    if ideal.is_homogeneous() {
        let mut current = ideal.clone();
        for i in 0..ideal.nvars() {
            current = saturate_homogeneous_by_variable(&current, i)?;
        }
        return Ok(current);
    }
    let vars = ideal.vars().clone();
    let product = Polynomial::monomial(vars.clone(), Monomial(vec![1; vars.len()]), F::one());
    saturate(ideal, &product)
}

/// Whether the ideal has points in the torus, i.e. its saturation by the
/// product of all variables is proper.
pub fn is_monomial_free<F: Field>(ideal: &IdealSpec<F>) -> Result<bool> {
    let sat = saturate_by_variables(ideal)?;
    let gb = reduced_groebner_basis(&sat, &TermOrder::grevlex())?;
    Ok(!gb.is_unit())
}

fn grevlex_basis<F: Field>(ideal: &IdealSpec<F>) -> Result<GroebnerBasis<F>> {
    reduced_groebner_basis(ideal, &TermOrder::grevlex())
}

/// Dimension of the affine variety; -1 for the unit ideal.
pub fn krull_dimension<F: Field>(ideal: &IdealSpec<F>) -> Result<i64> {
    let gb = grevlex_basis(ideal)?;
    if gb.is_unit() {
        return Ok(-1);
    }
    let n = ideal.nvars();
    assert!(n < 32, "subset search is exhaustive");
    let supports: Vec<u32> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.0.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u32, |acc, (i, _)| acc | (1 << i)))
        .collect();
    let best = (0u32..1 << n)
        .filter(|&s| supports.iter().all(|&lm| lm & !s != 0))
        .map(|s| s.count_ones())
        .max()
        .unwrap_or(0);
    Ok(best as i64)
}

/// Number of standard monomials of a zero-dimensional ideal.
pub fn vector_space_dimension<F: Field>(ideal: &IdealSpec<F>) -> Result<u64> {
    let gb = grevlex_basis(ideal)?;
    if gb.is_unit() {
        return Ok(0);
    }
    let n = ideal.nvars();
    let leading = gb.leading_monomials();
    let mut bounds = Vec::with_capacity(n);
    for i in 0..n {
        let pure = leading
            .iter()
            .filter(|m| m.0.iter().enumerate().all(|(j, &e)| j == i || e == 0))
            .map(|m| m.0[i])
            .min();
        match pure {
            Some(b) => bounds.push(b),
            None => return Err(Error::NotZeroDimensional),
        }
    }
    let mut count = 0u64;
    let mut e = vec![0u32; n];
    loop {
        let m = Monomial(e.clone());
        if !leading.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
        // odometer over the box below the pure powers
        let mut k = 0;
        while k < n {
            e[k] += 1;
            if e[k] < bounds[k] {
                break;
            }
            e[k] = 0;
            k += 1;
        }
        if k == n {
            return Ok(count);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_ideal, parse_polynomial};

    fn ideal(gens: &[&str], vars: &[&str]) -> IdealSpec {
        parse_ideal(gens, vars).unwrap()
    }

    fn same_ideal(a: &IdealSpec, b: &IdealSpec) {
        let ga = reduced_groebner_basis(a, &TermOrder::grevlex()).unwrap();
        let gb = reduced_groebner_basis(b, &TermOrder::grevlex()).unwrap();
        assert_eq!(ga.elements(), gb.elements());
    }

    #[test]
    fn saturation_examples() {
        let xy = ["x", "y"];
        let y = parse_polynomial("y", &xy).unwrap();
        let x = parse_polynomial("x", &xy).unwrap();
        same_ideal(&saturate(&ideal(&["x*y"], &xy), &y).unwrap(), &ideal(&["x"], &xy));
        same_ideal(&saturate(&ideal(&["x"], &xy), &y).unwrap(), &ideal(&["x"], &xy));
        same_ideal(&saturate(&ideal(&["x^2*y-x^2"], &xy), &x).unwrap(), &ideal(&["y-1"], &xy));
        let zero = parse_polynomial("0", &xy).unwrap();
        assert_eq!(saturate(&ideal(&["x"], &xy), &zero), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn homogeneous_saturation_matches_elimination() {
        let vars = ["x", "y", "z"];
        for gens in [vec!["x*y*z", "x^2*y-y^2*z"], vec!["x^2*z-y^3", "x*y^2-z^3"], vec!["x*y-z^2", "x^3"]] {
            let i = ideal(&gens, &vars);
            let product = parse_polynomial("x*y*z", &vars).unwrap();
            same_ideal(&saturate_by_variables(&i).unwrap(), &saturate(&i, &product).unwrap());
        }
    }

    #[test]
    fn monomial_freeness() {
        assert!(is_monomial_free(&ideal(&["x+y"], &["x", "y"])).unwrap());
        assert!(!is_monomial_free(&ideal(&["h"], &["h", "x", "y"])).unwrap());
        assert!(is_monomial_free(&ideal(&["x*y-x"], &["x", "y"])).unwrap());
        assert!(!is_monomial_free(&ideal(&["x*y", "x+y+1"], &["x", "y"])).unwrap());
    }

    #[test]
    fn dimensions() {
        assert_eq!(krull_dimension(&ideal(&["x+y+1"], &["x", "y"])).unwrap(), 1);
        assert_eq!(krull_dimension(&ideal(&["x*y"], &["x", "y"])).unwrap(), 1);
        assert_eq!(krull_dimension(&ideal(&["x", "y"], &["x", "y"])).unwrap(), 0);
        assert_eq!(krull_dimension(&ideal(&["1"], &["x", "y"])).unwrap(), -1);

        assert_eq!(vector_space_dimension(&ideal(&["x^2"], &["x"])).unwrap(), 2);
        assert_eq!(vector_space_dimension(&ideal(&["x^2", "x*y", "y^2"], &["x", "y"])).unwrap(), 3);
        assert_eq!(vector_space_dimension(&ideal(&["y^2+y+1"], &["y"])).unwrap(), 2);
        assert_eq!(vector_space_dimension(&ideal(&["x*y"], &["x", "y"])), Err(Error::NotZeroDimensional));
    }
}
