use super::parse::parse_in;
use super::polynomial::{Monomial, Polynomial, Variables};
use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::Rational;

/// A finite generating set of an ideal.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealSpec<F = Rational> {
    vars: Variables,
    generators: Vec<Polynomial<F>>,
}

impl<F: Field> IdealSpec<F> {
    pub fn new(vars: Variables, generators: Vec<Polynomial<F>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        for g in &generators {
            if g.vars() != &vars {
                return Err(Error::DimMismatch { expected: vars.len(), found: g.nvars() });
            }
        }
        Ok(IdealSpec { vars, generators })
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    /// The same ideal with zero generators removed; `ZeroIdeal` if none remain.
    pub fn without_zeros(&self) -> Result<Self> {
        let gens: Vec<_> = self.generators.iter().filter(|g| !g.is_zero()).cloned().collect();
        IdealSpec::new(self.vars.clone(), gens)
    }

    /// Prepends a homogenizing variable and homogenizes every generator.
    pub fn homogenize(&self) -> Self {
        let name = self.vars.fresh_name("h");
        let mut names = vec![name];
        names.extend(self.vars.names().iter().cloned());
        let vars = Variables::unchecked(names);
        let generators = self
            .generators
            .iter()
            .map(|g| {
                let d = g.degree().unwrap_or(0);
                g.map_monomials(vars.clone(), |m| {
                    let mut e = Vec::with_capacity(m.0.len() + 1);
                    e.push((d - m.degree()) as u32);
                    e.extend_from_slice(&m.0);
                    Monomial(e)
                })
            })
            .collect();
        IdealSpec { vars, generators }
    }

    /// Sets the first variable to 1 and drops it from the ring.
    pub fn dehomogenize(&self) -> Self {
        let vars = Variables::unchecked(self.vars.names()[1..].to_vec());
        let generators =
            self.generators.iter().map(|g| g.map_monomials(vars.clone(), |m| Monomial(m.0[1..].to_vec()))).collect();
        IdealSpec { vars, generators }
    }
}

/// Parses a list of generators over the named variables.
pub fn parse_ideal<S: AsRef<str>, V: AsRef<str>>(generators: &[S], variables: &[V]) -> Result<IdealSpec> {
    let vars = Variables::new(variables)?;
    let gens = generators.iter().map(|g| parse_in(g.as_ref(), &vars)).collect::<Result<Vec<_>>>()?;
    IdealSpec::new(vars, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn same_generators(i: &IdealSpec, expected: &[&str]) {
        let want = parse_ideal(expected, i.vars().names()).unwrap();
        assert_eq!(i.generators(), want.generators());
    }

    #[test]
    fn homogenize_examples() {
        let i = parse_ideal(&["x+y+1"], &["x", "y"]).unwrap().homogenize();
        assert_eq!(i.vars().names(), &["h", "x", "y"]);
        same_generators(&i, &["x+y+h"]);
        assert!(i.is_homogeneous());

        let i = parse_ideal(&["x+y+z", "x^2+y^2+z^2"], &["x", "y", "z"]).unwrap().homogenize();
        same_generators(&i, &["x+y+z", "x^2+y^2+z^2"]);

        let i = parse_ideal(&["x^2+y"], &["x", "y"]).unwrap().homogenize();
        same_generators(&i, &["x^2+h*y"]);
    }

    #[test]
    fn fresh_homogenizing_name() {
        let i = parse_ideal(&["h+1"], &["h"]).unwrap().homogenize();
        assert_eq!(i.vars().names(), &["h0", "h"]);
    }

    #[test]
    fn empty_generator_list_is_rejected() {
        let empty: [&str; 0] = [];
        assert_eq!(parse_ideal(&empty, &["x"]), Err(Error::ZeroIdeal));
    }
}
