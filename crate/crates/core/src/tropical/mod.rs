//! Tropical hypersurfaces, prevarieties, varieties, tropical bases and
//! stable intersection. Everything is computed in the min convention and
//! negated at the boundary when max is requested.

mod basis;
mod hypersurface;
mod stable;
mod variety;

pub use basis::is_tropical_basis;
pub use hypersurface::{tropical_evaluate, tropical_hypersurface, tropical_prevariety};
pub use stable::stable_intersection;
pub use variety::{multiplicity_at, tropical_variety, Strategy, VarietyOptions};
