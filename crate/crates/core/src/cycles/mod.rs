//! Weighted fans and tropical cycles.

mod balance;
mod json;

use std::collections::BTreeMap;
use std::ops::Deref;

use crate::convention::Convention;
use crate::error::{Error, Result};
use crate::fans::{Cone, Fan};
use crate::IntegerMatrix;

pub use balance::is_balanced;
pub use json::{read_json, write_json};

/// A fan with a positive integer weight on every maximal cone.
///
/// Purity is not required; see [`TropicalCycle`] for the pure version.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedFan {
    fan: Fan,
    multiplicities: Vec<u64>,
    convention: Convention,
}

impl WeightedFan {
    /// Pairs `mults[i]` with `fan.maximal_cones()[i]`; zero weights drop their cone.
    pub fn new(fan: Fan, mults: &[u64], convention: Convention) -> Result<WeightedFan> {
        if mults.len() != fan.num_cones() {
            return Err(Error::MultiplicityCountMismatch { expected: fan.num_cones(), found: mults.len() });
        }
        if mults.iter().all(|&m| m > 0) {
            return Ok(WeightedFan { fan, multiplicities: mults.to_vec(), convention });
        }
        let pairs = fan.cones().iter().cloned().zip(mults.iter().copied());
        WeightedFan::from_weighted_cones(fan.ambient_dim(), pairs, convention)
    }

    /// Builds a weighted fan from cones with weights; equal cones add up,
    /// zero weights and non-maximal cones are dropped.
    pub fn from_weighted_cones(
        ambient_dim: usize,
        cones: impl IntoIterator<Item = (Cone, u64)>,
        convention: Convention,
    ) -> Result<WeightedFan> {
        let mut weights: BTreeMap<Cone, u64> = BTreeMap::new();
        for (c, m) in cones {
            if m > 0 {
                *weights.entry(c).or_insert(0) += m;
            }
        }
        let fan = Fan::from_cones(ambient_dim, weights.keys().cloned())?;
        let multiplicities = fan.cones().iter().map(|c| weights[c]).collect();
        Ok(WeightedFan { fan, multiplicities, convention })
    }

    pub fn empty(ambient_dim: usize, convention: Convention) -> WeightedFan {
        WeightedFan { fan: Fan::empty(ambient_dim), multiplicities: Vec::new(), convention }
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn ambient_dim(&self) -> usize {
        self.fan.ambient_dim()
    }

    /// Rays as the columns of a matrix.
    pub fn rays(&self) -> IntegerMatrix {
        self.fan.ray_matrix()
    }

    pub fn lineality_space(&self) -> IntegerMatrix {
        self.fan.lineality_matrix()
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        self.fan.maximal_cones()
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    /// Dimension of the largest cone, counting lineality; -1 when empty.
    pub fn dim(&self) -> i64 {
        self.fan.dim()
    }

    pub fn is_pure(&self) -> bool {
        self.fan.is_pure()
    }

    pub fn weighted_cones(&self) -> impl Iterator<Item = (&Cone, u64)> {
        self.fan.cones().iter().zip(self.multiplicities.iter().copied())
    }

    /// Negates the fan and flips the convention tag.
    pub fn swap_convention(&self) -> WeightedFan {
        let cones = self.weighted_cones().map(|(c, m)| (c.negated(), m));
        let mut out = WeightedFan::from_weighted_cones(self.ambient_dim(), cones, self.convention.flipped())
            .expect("negation preserves fan data");
        out.convention = self.convention.flipped();
        out
    }

    /// Balancing check; refuses non-pure fans.
    pub fn is_balanced(&self) -> Result<bool> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(balance::balanced(self))
    }
}

/// A pure weighted fan.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropicalCycle(WeightedFan);

impl TropicalCycle {
    pub fn new(weighted: WeightedFan) -> Result<TropicalCycle> {
        if !weighted.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(TropicalCycle(weighted))
    }

    pub fn empty(ambient_dim: usize, convention: Convention) -> TropicalCycle {
        TropicalCycle(WeightedFan::empty(ambient_dim, convention))
    }

    pub fn as_weighted_fan(&self) -> &WeightedFan {
        &self.0
    }

    pub fn into_weighted_fan(self) -> WeightedFan {
        self.0
    }

    pub fn swap_convention(&self) -> TropicalCycle {
        TropicalCycle(self.0.swap_convention())
    }
}

impl Deref for TropicalCycle {
    type Target = WeightedFan;

    fn deref(&self) -> &WeightedFan {
        &self.0
    }
}

/// Builds a cycle without checking the balancing condition.
pub fn make_cycle(fan: Fan, mults: &[u64], convention: Convention) -> Result<TropicalCycle> {
    TropicalCycle::new(WeightedFan::new(fan, mults, convention)?)
}

/// Result of a computation that is a cycle when pure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TropicalOutput {
    Cycle(TropicalCycle),
    Fan(WeightedFan),
}

impl TropicalOutput {
    /// Wraps a weighted fan, as a cycle when it is pure.
    pub fn classify(weighted: WeightedFan) -> TropicalOutput {
        if weighted.is_pure() {
            TropicalOutput::Cycle(TropicalCycle(weighted))
        } else {
            TropicalOutput::Fan(weighted)
        }
    }

    pub fn weighted_fan(&self) -> &WeightedFan {
        match self {
            TropicalOutput::Cycle(c) => c,
            TropicalOutput::Fan(f) => f,
        }
    }

    pub fn into_weighted_fan(self) -> WeightedFan {
        match self {
            TropicalOutput::Cycle(c) => c.0,
            TropicalOutput::Fan(f) => f,
        }
    }

    pub fn as_cycle(&self) -> Option<&TropicalCycle> {
        match self {
            TropicalOutput::Cycle(c) => Some(c),
            TropicalOutput::Fan(_) => None,
        }
    }

    pub fn into_cycle(self) -> Result<TropicalCycle> {
        match self {
            TropicalOutput::Cycle(c) => Ok(c),
            TropicalOutput::Fan(_) => Err(Error::NotPure),
        }
    }

    pub fn swap_convention(&self) -> TropicalOutput {
        TropicalOutput::classify(self.weighted_fan().swap_convention())
    }
}

impl Deref for TropicalOutput {
    type Target = WeightedFan;

    fn deref(&self) -> &WeightedFan {
        self.weighted_fan()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::lattice::IntVec;
    use num_bigint::BigInt;

    fn iv(v: &[i64]) -> IntVec {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    pub(crate) fn line_fan() -> Fan {
        Fan::from_index_sets(2, &[iv(&[-1, -1]), iv(&[1, 0]), iv(&[0, 1])], &[], &[vec![0], vec![1], vec![2]]).unwrap()
    }

    #[test]
    fn construction_does_not_check_balancing() {
        assert!(make_cycle(line_fan(), &[1, 1, 1], Convention::Min).is_ok());
        assert!(make_cycle(line_fan(), &[2, 1, 1], Convention::Min).is_ok());
        assert_eq!(
            make_cycle(line_fan(), &[1, 1], Convention::Min),
            Err(Error::MultiplicityCountMismatch { expected: 3, found: 2 })
        );
    }

    #[test]
    fn zero_weights_drop_cones() {
        let c = make_cycle(line_fan(), &[1, 0, 1], Convention::Min).unwrap();
        assert_eq!(c.max_cones().len(), 2);
        assert_eq!(c.multiplicities(), &[1, 1]);
    }

    #[test]
    fn non_pure_fans_are_refused() {
        let quadrant = Cone::from_generators(2, &[iv(&[1, 0]), iv(&[0, 1])], &[]).unwrap();
        let ray = Cone::from_generators(2, &[iv(&[-1, -1])], &[]).unwrap();
        let fan = Fan::from_cones(2, [quadrant, ray]).unwrap();
        assert_eq!(make_cycle(fan.clone(), &[1, 1], Convention::Min), Err(Error::NotPure));
        let wf = WeightedFan::new(fan, &[1, 1], Convention::Min).unwrap();
        assert_eq!(wf.is_balanced(), Err(Error::NotPure));
    }

    #[test]
    fn swapping_negates_and_is_an_involution() {
        let c = make_cycle(line_fan(), &[1, 1, 1], Convention::Min).unwrap();
        let s = c.swap_convention();
        assert_eq!(s.convention(), Convention::Max);
        assert_eq!(s.fan().rays(), &[iv(&[-1, 0]), iv(&[0, -1]), iv(&[1, 1])]);
        assert_eq!(s.swap_convention(), c);

        let origin = make_cycle(Fan::from_cones(2, [Cone::origin(2)]).unwrap(), &[1], Convention::Min).unwrap();
        let swapped = origin.swap_convention();
        assert_eq!(swapped.fan(), origin.fan());
        assert_eq!(swapped.convention(), Convention::Max);
    }

    #[test]
    fn line_accessors() {
        let c = make_cycle(line_fan(), &[1, 1, 1], Convention::Min).unwrap();
        assert_eq!(c.rays().column_vecs(), vec![iv(&[-1, -1]), iv(&[0, 1]), iv(&[1, 0])]);
        assert_eq!(c.lineality_space().cols(), 0);
        assert_eq!(c.max_cones(), &[vec![0], vec![1], vec![2]]);
        assert_eq!(c.dim(), 1);
    }
}
