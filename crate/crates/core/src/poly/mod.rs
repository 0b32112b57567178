//! Multivariate polynomials over a field with named, ordered variables.

mod ideal;
mod newton;
mod parse;
mod polynomial;

pub use ideal::{parse_ideal, IdealSpec};
pub use newton::{initial_form, newton_polytope};
pub use parse::{parse_in, parse_polynomial};
pub use polynomial::{Monomial, Polynomial, Variables};
