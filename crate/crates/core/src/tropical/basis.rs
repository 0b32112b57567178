use num_bigint::BigInt;

use super::hypersurface::tropical_prevariety;
use super::variety::{checked_ideal, Analysis};
use crate::convention::Convention;
use crate::error::{Error, Result};
use crate::fans::Cone;
use crate::linalg::lattice::IntVec;
use crate::poly::{IdealSpec, Polynomial};
use crate::scalar::Field;

/// Whether the prevariety of `polys` equals the tropical variety of the
/// ideal they generate. The answer does not depend on the convention.
///
/// Every prevariety cone is lifted into the homogenized space and cut by
/// the maximal Gröbner cones; each piece lies in the relative interior of
/// one Gröbner face, whose membership decides the piece.
pub fn is_tropical_basis<F: Field>(polys: &[Polynomial<F>], _convention: Convention) -> Result<bool> {
    let Some(first) = polys.first() else {
        return Err(Error::ZeroIdeal);
    };
    // Validates the generators and fixes the ring.
    let pre = tropical_prevariety(polys, Convention::Min)?;
    let ideal = checked_ideal(&IdealSpec::new(first.vars().clone(), polys.to_vec())?)?;
    if ideal.generators().len() == 1 {
        return Ok(true);
    }
    let n = ideal.nvars();
    let analysis = Analysis::run(&ideal.homogenize())?;
    let kept_dim = analysis.maximal_kept().iter().map(|(c, _)| c.dim() as i64 - 1).max().unwrap_or(-1);
    if pre.dim() != kept_dim {
        return Ok(false);
    }
    let diagonal: IntVec = vec![BigInt::from(1); n + 1];
    let lift = |v: &IntVec| {
        let mut out = Vec::with_capacity(n + 1);
        out.push(BigInt::from(0));
        out.extend(v.iter().cloned());
        out
    };
    for cone in pre.cones() {
        let rays: Vec<IntVec> = cone.rays().iter().map(lift).collect();
        let mut lin: Vec<IntVec> = cone.lineality().iter().map(lift).collect();
        lin.push(diagonal.clone());
        let lifted = Cone::from_generators(n + 1, &rays, &lin)?;
        for gc in &analysis.cones {
            let piece = lifted.intersection(&gc.cone)?;
            let face = gc.cone.smallest_face_containing(&piece);
            let inside = analysis.faces.get(&face).map(|s| s.0).expect("faces of Gröbner cones are classified");
            if !inside {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
