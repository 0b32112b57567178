//! Exact tropical geometry over the rationals with trivial valuation.
//!
//! The kernel computes tropical hypersurfaces, prevarieties and tropical
//! varieties (with multiplicities) of polynomial ideals, checks the balancing
//! condition and tropical bases, and forms stable intersections of tropical
//! cycles. Everything is exact: integers are `BigInt`, coefficients default
//! to `BigRational`.
//!
//! ```
//! use trop_core::{parse_ideal, tropical_variety, VarietyOptions};
//!
//! let ideal = parse_ideal(&["x+y+1"], &["x", "y"]).unwrap();
//! let line = tropical_variety(&ideal, &VarietyOptions::default()).unwrap();
//! assert_eq!(line.dim(), 1);
//! assert_eq!(line.multiplicities(), &[1, 1, 1]);
//! ```

pub mod convention;
pub mod cycles;
pub mod error;
pub mod fans;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod tropical;

pub use convention::Convention;
pub use cycles::{is_balanced, make_cycle, TropicalCycle, TropicalOutput, WeightedFan};
pub use error::{Error, Result};
pub use fans::{Cone, Fan};
pub use groebner::{GroebnerBasis, TermOrder};
pub use linalg::{Lattice, Matrix};
pub use poly::{parse_ideal, parse_polynomial, IdealSpec, Monomial, Polynomial};
pub use scalar::{Field, IntegerScalar, OrderedField};
pub use tropical::{
    is_tropical_basis, stable_intersection, tropical_evaluate, tropical_hypersurface, tropical_prevariety,
    tropical_variety, Strategy, VarietyOptions,
};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
pub type IntegerMatrix = Matrix<Int>;
pub type RationalMatrix = Matrix<Rational>;
/// Polynomial with rational coefficients.
pub type QPolynomial = Polynomial<Rational>;
/// Ideal with rational coefficients.
pub type QIdeal = IdealSpec<Rational>;
