//! Exact integer and rational linear algebra.

pub mod lattice;
pub mod matrix;
pub mod normal_form;
pub mod simplex;
pub mod solve;

pub use lattice::{cone_feasible, lattice_index, IntVec, Lattice};
pub use matrix::{dot, Matrix};
pub use normal_form::{determinant, extended_gcd, hermite_normal_form, invariant_factors, primitive_vector, smith_normal_form};
pub use simplex::{feasible_point, maximize, LpOutcome};
pub use solve::{inverse, nullspace, rank, row_reduce, solve};
