//! Scalar traits the kernel is generic over.
//!
//! Polynomial coefficients live in a [`Field`]; the simplex routines need an
//! [`OrderedField`]; Hermite and Smith normal forms run over any
//! [`IntegerScalar`]. The crate root fixes the exact defaults
//! (`BigRational`, `BigInt`), but machine-word variants such as
//! `Ratio<i64>` and `i64` plug in for small inputs.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed, ToPrimitive, Zero};

pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {}

impl<T: Clone + PartialEq + Debug + Display + Send + Sync + 'static> Scalar for T {}

/// Exact coefficient field.
pub trait Field: Scalar + Num + Neg<Output = Self> {
    /// Converts a reduced fraction, or `None` when it does not fit.
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(&BigInt::from(n), &BigInt::from(1)).expect("small integers fit every field")
    }
}

/// A field with a total order compatible with arithmetic.
pub trait OrderedField: Field + PartialOrd + Signed {}

impl<T: Field + PartialOrd + Signed> OrderedField for T {}

/// Euclidean integer ring for lattice algorithms.
pub trait IntegerScalar: Scalar + Integer + Signed + From<i64> {}

impl<T: Scalar + Integer + Signed + From<i64>> IntegerScalar for T {}

impl Field for BigRational {
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self> {
        if denom.is_zero() {
            return None;
        }
        Some(BigRational::new(numer.clone(), denom.clone()))
    }
}

macro_rules! impl_machine_ratio {
    ($($t:ty),*) => {$(
        impl Field for Ratio<$t> {
            fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self> {
                let n = numer.to_i128()?;
                let d = denom.to_i128()?;
                if d == 0 {
                    return None;
                }
                let g = n.gcd(&d);
                let (n, d) = (n / g, d / g);
                Some(Ratio::new(<$t>::try_from(n).ok()?, <$t>::try_from(d).ok()?))
            }
        }
    )*};
}

impl_machine_ratio!(i64, i128);
