use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::Rational;

/// Exponent vector. Ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Weighted degree `w · u`.
    pub fn weight(&self, w: &[Rational]) -> Rational {
        self.0.iter().zip(w).fold(Rational::from_integer(0.into()), |acc, (&e, wi)| acc + wi * Rational::from_integer(e.into()))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered list of variable names shared by polynomials of one ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variables(Arc<[String]>);

impl Variables {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        if names.is_empty() {
            return Err(Error::parse(0, "at least one variable is required"));
        }
        for (i, n) in names.iter().enumerate() {
            let mut chars = n.chars();
            let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::parse(0, format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::parse(0, format!("duplicate variable `{n}`")));
            }
        }
        Ok(Variables(names.into()))
    }

    /// Builds names without validation; used for internally generated rings.
    pub(crate) fn unchecked(names: Vec<String>) -> Self {
        Variables(names.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// A name not already in use, starting from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (0..).map(|i| format!("{base}{i}")).find(|n| self.index_of(n).is_none()).expect("unbounded search")
    }
}

/// Sparse multivariate polynomial over a field.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<F = Rational> {
    vars: Variables,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(vars: Variables) -> Self {
        Polynomial { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Variables, c: F) -> Self {
        let n = vars.len();
        Polynomial::from_terms(vars, [(Monomial::one(n), c)])
    }

    pub fn variable(vars: Variables, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Polynomial::from_terms(vars, [(Monomial(e), F::one())])
    }

    pub fn monomial(vars: Variables, m: Monomial, c: F) -> Self {
        Polynomial::from_terms(vars, [(m, c)])
    }

    /// Sums the given terms, dropping zero coefficients.
    pub fn from_terms(vars: Variables, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Polynomial::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), p.vars.len(), "monomial length does not match the ring");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Monomial> {
        self.terms.keys().cloned().collect()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn scale(&self, c: &F) -> Self {
        Polynomial::from_terms(self.vars.clone(), self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ring(other);
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        let mut p = Polynomial::zero(self.vars.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                p.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Polynomial::constant(self.vars.clone(), F::one());
        for _ in 0..k {
            result = result.mul(self);
        }
        result
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "polynomials from different rings");
    }

    /// Rewrites the polynomial into another ring by mapping each exponent vector.
    pub fn map_monomials(&self, vars: Variables, f: impl Fn(&Monomial) -> Monomial) -> Self {
        Polynomial::from_terms(vars, self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Divides by the leading coefficient in graded-lex order.
    pub fn monic(&self) -> Self {
        match self.terms.values().next_back() {
            Some(lc) => self.scale(&(F::one() / lc.clone())),
            None => self.clone(),
        }
    }

    /// Substitutes `value` for variable `i`, keeping the variable in the ring.
    pub fn evaluate_variable(&self, i: usize, value: &F) -> Self {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = m.0.clone();
            let k = std::mem::replace(&mut e[i], 0);
            let mut coef = c.clone();
            for _ in 0..k {
                coef = coef * value.clone();
            }
            (Monomial(e), coef)
        });
        Polynomial::from_terms(self.vars.clone(), terms)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let coef = c.to_string();
            let negative = coef.starts_with('-');
            let magnitude = coef.trim_start_matches('-');
            if negative {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if magnitude != "1" || m.degree() == 0 {
                factors.push(magnitude.to_string());
            }
            for (name, &e) in self.vars.names().iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
