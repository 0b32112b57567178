use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::convention::Convention;
use crate::error::{Error, Result};
use crate::poly::Monomial;
use crate::Rational;

/// Matrix term order: weight rows compared in turn, then graded reverse
/// lexicographic with the first variable largest.
///
/// Under the min convention a smaller weight leads; under max a larger one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    weights: Vec<Vec<Rational>>,
    convention: Convention,
}

impl TermOrder {
    pub fn new(weights: Vec<Vec<Rational>>, convention: Convention) -> Self {
        TermOrder { weights, convention }
    }

    /// Plain graded reverse lexicographic order.
    pub fn grevlex() -> Self {
        TermOrder { weights: Vec::new(), convention: Convention::Min }
    }

    /// A single weight vector refined by the tie-break.
    pub fn weight(w: Vec<Rational>, convention: Convention) -> Self {
        TermOrder { weights: vec![w], convention }
    }

    pub(crate) fn from_int_rows(rows: &[Vec<BigInt>], convention: Convention) -> Self {
        let weights = rows.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
        TermOrder { weights, convention }
    }

    pub fn weights(&self) -> &[Vec<Rational>] {
        &self.weights
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Rows as seen by leading-term selection: larger always leads.
    fn effective_rows(&self) -> impl Iterator<Item = Vec<Rational>> + '_ {
        self.weights.iter().map(move |row| match self.convention {
            Convention::Min => row.iter().map(|x| -x).collect(),
            Convention::Max => row.clone(),
        })
    }

    /// Whether some effective weight is negative, so that the order is not a
    /// well-order on non-homogeneous input.
    pub fn needs_homogeneous_input(&self) -> bool {
        use num_traits::Signed;
        self.effective_rows().any(|row| row.iter().any(|x| x.is_negative()))
    }

    pub(crate) fn compile(&self, nvars: usize) -> Result<CompiledOrder> {
        let mut rows = Vec::with_capacity(self.weights.len());
        for row in self.effective_rows() {
            if row.len() != nvars {
                return Err(Error::DimMismatch { expected: nvars, found: row.len() });
            }
            let lcm = row.iter().fold(BigInt::one(), |l, x| num_integer::lcm(l, x.denom().clone()));
            let ints = row
                .iter()
                .map(|x| {
                    (x * Rational::from_integer(lcm.clone()))
                        .to_integer()
                        .to_i128()
                        .ok_or_else(|| Error::Overflow("term order weight exceeds 128 bits".into()))
                })
                .collect::<Result<Vec<i128>>>()?;
            rows.push(ints);
        }
        Ok(CompiledOrder { rows })
    }
}

/// Integer form of a term order used inside Buchberger.
#[derive(Debug, Clone)]
pub(crate) struct CompiledOrder {
    rows: Vec<Vec<i128>>,
}

impl CompiledOrder {
    /// `Greater` means `a` leads `b`.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for row in &self.rows {
            let wa: i128 = row.iter().zip(&a.0).map(|(w, &e)| w * e as i128).sum();
            let wb: i128 = row.iter().zip(&b.0).map(|(w, &e)| w * e as i128).sum();
            match wa.cmp(&wb) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            other => return other,
        }
        for (ea, eb) in a.0.iter().zip(&b.0).rev() {
            if ea != eb {
                return eb.cmp(ea);
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn grevlex_tie_break() {
        let o = TermOrder::grevlex().compile(3).unwrap();
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[1, 1, 0])), Ordering::Equal);
    }

    #[test]
    fn min_convention_prefers_small_weight() {
        let o = TermOrder::weight(vec![q(0), q(1), q(1)], Convention::Min);
        assert!(o.needs_homogeneous_input());
        let c = o.compile(3).unwrap();
        assert_eq!(c.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        let max = TermOrder::weight(vec![q(0), q(1), q(1)], Convention::Max);
        assert!(!max.needs_homogeneous_input());
        assert_eq!(max.compile(3).unwrap().cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Less);
    }

    #[test]
    fn rational_weights_are_scaled() {
        let half = Rational::new(1.into(), 2.into());
        let o = TermOrder::weight(vec![half, q(-1)], Convention::Max).compile(2).unwrap();
        assert_eq!(o.cmp(&m(&[2, 1]), &m(&[0, 0])), Ordering::Greater);
        assert!(TermOrder::weight(vec![q(1)], Convention::Min).compile(2).is_err());
    }
}
