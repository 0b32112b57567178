//! Rational polyhedral cones and fans.

mod cone;
pub(crate) mod dd;
mod fan;

pub use cone::Cone;
pub use fan::Fan;
