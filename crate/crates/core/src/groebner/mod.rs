//! Gröbner bases for matrix term orders, ideal operations and Gröbner fans.

mod buchberger;
mod fan;
mod ops;
mod order;

pub use buchberger::{reduced_groebner_basis, GroebnerBasis};
pub use fan::{groebner_cone, groebner_fan, GroebnerCone};
pub use ops::{is_monomial_free, krull_dimension, saturate, saturate_by_variables, vector_space_dimension};
pub use order::TermOrder;
