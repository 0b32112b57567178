//! Buchberger's algorithm with the normal selection strategy.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::order::{CompiledOrder, TermOrder};
use crate::error::{Error, Result};
use crate::poly::{initial_form, IdealSpec, Monomial, Polynomial, Variables};
use crate::scalar::Field;
use crate::Rational;

/// Terms sorted so that the leading term comes first.
pub(crate) type Terms<F> = Vec<(Monomial, F)>;

pub(crate) fn sorted_terms<F: Field>(p: &Polynomial<F>, ord: &CompiledOrder) -> Terms<F> {
    let mut t: Terms<F> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    t.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    t
}

fn divide(a: &Monomial, b: &Monomial) -> Monomial {
    Monomial(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
}

/// `p - c * m * q`, merging two descending term lists.
fn sub_mul<F: Field>(p: &[(Monomial, F)], c: &F, m: &Monomial, q: &[(Monomial, F)], ord: &CompiledOrder) -> Terms<F> {
    let mut out = Vec::with_capacity(p.len() + q.len());
    let mut i = 0;
    let mut shifted = q.iter().map(|(mq, cq)| (mq.mul(m), -(c.clone() * cq.clone()))).peekable();
    while i < p.len() || shifted.peek().is_some() {
        let take_p = match (p.get(i), shifted.peek()) {
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some((mp, _)), Some((ms, _))) => ord.cmp(mp, ms),
            (None, None) => unreachable!(),
        };
        match take_p {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => out.push(shifted.next().expect("peeked")),
            Ordering::Equal => {
                let (ms, cs) = shifted.next().expect("peeked");
                let sum = p[i].1.clone() + cs;
                if !sum.is_zero() {
                    out.push((ms, sum));
                }
                i += 1;
            }
        }
    }
    out
}

fn make_monic<F: Field>(t: &mut Terms<F>) {
    if let Some((_, lc)) = t.first() {
        let inv = F::one() / lc.clone();
        for (_, c) in t.iter_mut() {
            *c = c.clone() * inv.clone();
        }
    }
}

/// Full reduction of `f` modulo monic `basis`.
pub(crate) fn reduce<F: Field>(f: &[(Monomial, F)], basis: &[Terms<F>], ord: &CompiledOrder) -> Terms<F> {
    let mut rest: Terms<F> = f.to_vec();
    let mut out: Terms<F> = Vec::new();
    while let Some((m, c)) = rest.first().cloned() {
        match basis.iter().find(|g| g[0].0.divides(&m)) {
            Some(g) => {
                let shift = divide(&m, &g[0].0);
                rest = sub_mul(&rest, &c, &shift, g, ord);
            }
            None => {
                out.push((m, c));
                rest.remove(0);
            }
        }
    }
    out
}

fn s_polynomial<F: Field>(f: &Terms<F>, g: &Terms<F>, ord: &CompiledOrder) -> Terms<F> {
    let lcm = f[0].0.lcm(&g[0].0);
    let mf = divide(&lcm, &f[0].0);
    let mg = divide(&lcm, &g[0].0);
    let scaled: Terms<F> = f.iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    sub_mul(&scaled, &F::one(), &mg, g, ord)
}

fn coprime(a: &Monomial, b: &Monomial) -> bool {
    a.0.iter().zip(&b.0).all(|(x, y)| *x == 0 || *y == 0)
}

/// Reduced Gröbner basis as sorted term lists, leading monomials ascending.
pub(crate) fn buchberger<F: Field>(gens: &[Terms<F>], ord: &CompiledOrder) -> Vec<Terms<F>> {
    let mut basis: Vec<Terms<F>> = Vec::new();
    // (lcm degree, creation stamp, i, j)
    let mut queue: BTreeSet<(u64, u64, usize, usize)> = BTreeSet::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut stamp = 0u64;

    let mut add = |h: Terms<F>, basis: &mut Vec<Terms<F>>, queue: &mut BTreeSet<_>, pending: &mut BTreeSet<_>| {
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let deg = g[0].0.lcm(&h[0].0).degree();
            queue.insert((deg, stamp, i, k));
            pending.insert((i, k));
            stamp += 1;
        }
        basis.push(h);
    };

    for g in gens {
        let mut h = reduce(g, &basis, ord);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        add(h, &mut basis, &mut queue, &mut pending);
    }

    while let Some(entry) = queue.pop_first() {
        let (_, _, i, j) = entry;
        pending.remove(&(i, j));
        let (li, lj) = (&basis[i][0].0, &basis[j][0].0);
        if coprime(li, lj) {
            continue;
        }
        let lcm = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let mut h = reduce(&s, &basis, ord);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        add(h, &mut basis, &mut queue, &mut pending);
    }

    // Minimalize, then interreduce.
    let mut minimal: Vec<Terms<F>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = &g[0].0;
        let redundant = basis.iter().enumerate().any(|(k, other)| {
            k != i && other[0].0.divides(lm) && (other[0].0 != *lm || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Terms<F>> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Terms<F>> =
            minimal.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, g)| g.clone()).collect();
        let head = vec![minimal[i][0].clone()];
        let mut tail = reduce(&minimal[i][1..], &others, ord);
        let mut g = head;
        g.append(&mut tail);
        make_monic(&mut g);
        reduced.push(g);
    }
    reduced.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));
    reduced
}

/// A reduced Gröbner basis together with the order it was computed for.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis<F = Rational> {
    vars: Variables,
    order: TermOrder,
    elements: Vec<Polynomial<F>>,
    leading: Vec<Monomial>,
}

/// Computes the reduced Gröbner basis of the ideal for `order`.
pub fn reduced_groebner_basis<F: Field>(ideal: &IdealSpec<F>, order: &TermOrder) -> Result<GroebnerBasis<F>> {
    if order.needs_homogeneous_input() && !ideal.is_homogeneous() {
        return Err(Error::RequiresHomogeneous);
    }
    let ord = order.compile(ideal.nvars())?;
    let gens: Vec<Terms<F>> = ideal.generators().iter().map(|g| sorted_terms(g, &ord)).collect();
    let basis = buchberger(&gens, &ord);
    let vars = ideal.vars().clone();
    let leading = basis.iter().map(|g| g[0].0.clone()).collect();
    let elements = basis.into_iter().map(|g| Polynomial::from_terms(vars.clone(), g)).collect();
    Ok(GroebnerBasis { vars, order: order.clone(), elements, leading })
}

impl<F: Field> GroebnerBasis<F> {
    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    /// Leading exponent of each element, in the same order.
    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    /// Whether the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.leading.iter().any(|m| m.degree() == 0)
    }

    pub fn to_ideal(&self) -> IdealSpec<F> {
        let gens = if self.elements.is_empty() { vec![Polynomial::zero(self.vars.clone())] } else { self.elements.clone() };
        IdealSpec::new(self.vars.clone(), gens).expect("nonempty generator list in the same ring")
    }

    fn compiled(&self) -> CompiledOrder {
        self.order.compile(self.vars.len()).expect("order compiled when the basis was built")
    }

    fn term_lists(&self, ord: &CompiledOrder) -> Vec<Terms<F>> {
        self.elements.iter().map(|g| sorted_terms(g, ord)).collect()
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        if f.vars() != &self.vars {
            return Err(Error::DimMismatch { expected: self.vars.len(), found: f.nvars() });
        }
        let ord = self.compiled();
        let r = reduce(&sorted_terms(f, &ord), &self.term_lists(&ord), &ord);
        Ok(Polynomial::from_terms(self.vars.clone(), r))
    }

    /// Ideal membership.
    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Whether every S-polynomial reduces to zero (a post-hoc check).
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let ord = self.compiled();
        let lists = self.term_lists(&ord);
        for i in 0..lists.len() {
            for j in i + 1..lists.len() {
                if !reduce(&s_polynomial(&lists[i], &lists[j], &ord), &lists, &ord).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Whether the basis is reduced and monic.
    pub fn is_reduced(&self) -> bool {
        let ord = self.compiled();
        let lists = self.term_lists(&ord);
        lists.iter().enumerate().all(|(i, g)| {
            g[0].1 == F::one()
                && g.iter().all(|(m, _)| lists.iter().enumerate().all(|(k, h)| k == i || !h[0].0.divides(m)))
        })
    }

    /// Ideal generated by the initial forms of the basis elements.
    pub fn initial_ideal(&self, w: &[Rational]) -> Result<IdealSpec<F>> {
        if w.len() != self.vars.len() {
            return Err(Error::DimMismatch { expected: self.vars.len(), found: w.len() });
        }
        let gens = self
            .elements
            .iter()
            .map(|g| initial_form(g, w, self.order.convention()))
            .collect::<Result<Vec<_>>>()?;
        IdealSpec::new(self.vars.clone(), gens)
    }

    /// Canonical key of the basis: each leading exponent with its sorted
    /// trailing exponents.
    pub(crate) fn cone_key(&self) -> Vec<(Vec<u32>, Vec<Vec<u32>>)> {
        let mut key: Vec<(Vec<u32>, Vec<Vec<u32>>)> = self
            .elements
            .iter()
            .zip(&self.leading)
            .map(|(g, lm)| {
                let mut rest: Vec<Vec<u32>> = g.terms().map(|(m, _)| m.0.clone()).filter(|e| *e != lm.0).collect();
                rest.sort();
                (lm.0.clone(), rest)
            })
            .collect();
        key.sort();
        key
    }
}
