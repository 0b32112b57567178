use std::collections::BTreeSet;

use super::cone::Cone;
use crate::error::{Error, Result};
use crate::linalg::lattice::IntVec;
use crate::linalg::Matrix;
use crate::{IntegerMatrix, Rational};

/// A polyhedral fan stored as shared rays plus maximal-cone index sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fan {
    ambient_dim: usize,
    rays: Vec<IntVec>,
    lineality: Vec<IntVec>,
    maximal_cones: Vec<Vec<usize>>,
    cones: Vec<Cone>,
}

impl Fan {
    /// The fan with no cones at all (empty support).
    pub fn empty(ambient_dim: usize) -> Fan {
        Fan { ambient_dim, rays: Vec::new(), lineality: Vec::new(), maximal_cones: Vec::new(), cones: Vec::new() }
    }

    /// Builds the fan whose maximal cones are the inclusion-maximal members
    /// of `cones`. Every cone must have the same lineality space.
    ///
    /// Only containment is checked here; see [`Fan::is_fan`] for the
    /// face-intersection property.
    pub fn from_cones(ambient_dim: usize, cones: impl IntoIterator<Item = Cone>) -> Result<Fan> {
        let set: BTreeSet<Cone> = cones.into_iter().collect();
        let mut cones: Vec<Cone> = set.into_iter().collect();
        for c in &cones {
            if c.ambient_dim() != ambient_dim {
                return Err(Error::DimMismatch { expected: ambient_dim, found: c.ambient_dim() });
            }
        }
        if cones.is_empty() {
            return Ok(Fan::empty(ambient_dim));
        }
        let lineality = cones[0].lineality().to_vec();
        if cones.iter().any(|c| c.lineality() != lineality.as_slice()) {
            return Err(Error::InvalidFan("cones have different lineality spaces".into()));
        }
        // Larger cones first so that containment only needs to look back.
        cones.sort_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| a.cmp(b)));
        let mut maximal: Vec<Cone> = Vec::new();
        for c in cones {
            if !maximal.iter().any(|m| m.contains_cone(&c)) {
                maximal.push(c);
            }
        }
        let mut rays: Vec<IntVec> = maximal.iter().flat_map(|c| c.rays().iter().cloned()).collect();
        rays.sort();
        rays.dedup();
        let mut indexed: Vec<(Vec<usize>, Cone)> = maximal
            .into_iter()
            .map(|c| {
                let idx = c.rays().iter().map(|r| rays.binary_search(r).expect("ray collected above")).collect();
                (idx, c)
            })
            .collect();
        indexed.sort_by(|a, b| a.0.cmp(&b.0));
        let (maximal_cones, cones) = indexed.into_iter().unzip();
        Ok(Fan { ambient_dim, rays, lineality, maximal_cones, cones })
    }

    /// Builds a fan from explicit rays and index sets.
    pub fn from_index_sets(
        ambient_dim: usize,
        rays: &[IntVec],
        lineality: &[IntVec],
        maximal_cones: &[Vec<usize>],
    ) -> Result<Fan> {
        let mut cones = Vec::with_capacity(maximal_cones.len());
        for set in maximal_cones {
            let mut gens = Vec::with_capacity(set.len());
            for &i in set {
                let r = rays.get(i).ok_or_else(|| Error::InvalidFan(format!("ray index {i} out of range")))?;
                gens.push(r.clone());
            }
            cones.push(Cone::from_generators(ambient_dim, &gens, lineality)?);
        }
        Fan::from_cones(ambient_dim, cones)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn ray_matrix(&self) -> IntegerMatrix {
        Matrix::from_columns(self.ambient_dim, &self.rays)
    }

    pub fn lineality(&self) -> &[IntVec] {
        &self.lineality
    }

    pub fn lineality_matrix(&self) -> IntegerMatrix {
        Matrix::from_columns(self.ambient_dim, &self.lineality)
    }

    pub fn maximal_cones(&self) -> &[Vec<usize>] {
        &self.maximal_cones
    }

    /// The maximal cones, in the same order as [`Fan::maximal_cones`].
    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn num_cones(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    /// Largest cone dimension, counting lineality; -1 for the empty fan.
    pub fn dim(&self) -> i64 {
        self.cones.iter().map(|c| c.dim() as i64).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.cones.windows(2).all(|w| w[0].dim() == w[1].dim())
    }

    pub fn support_contains(&self, w: &[Rational]) -> Result<bool> {
        if w.len() != self.ambient_dim {
            return Err(Error::DimMismatch { expected: self.ambient_dim, found: w.len() });
        }
        Ok(self.cones.iter().any(|c| c.contains(w)))
    }

    /// All cones of the fan of the given dimension (faces of maximal cones).
    pub fn cones_of_dim(&self, dim: usize) -> Vec<Cone> {
        let mut out: BTreeSet<Cone> = BTreeSet::new();
        for c in &self.cones {
            if c.dim() >= dim {
                out.extend(c.faces(c.dim() - dim).expect("codim within range"));
            }
        }
        out.into_iter().collect()
    }

    /// Checks that pairwise intersections of maximal cones are faces of both.
    pub fn is_fan(&self) -> bool {
        for (i, a) in self.cones.iter().enumerate() {
            for b in &self.cones[i + 1..] {
                let Ok(meet) = a.intersection(b) else { return false };
                if !a.has_face(&meet) || !b.has_face(&meet) {
                    return false;
                }
            }
        }
        true
    }

    /// Pointwise negation.
    pub fn negated(&self) -> Fan {
        Fan::from_cones(self.ambient_dim, self.cones.iter().map(Cone::negated)).expect("negation preserves fan data")
    }

    /// The fan of all pairwise intersections, keeping maximal ones.
    pub fn common_refinement(&self, other: &Fan) -> Result<Fan> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        let mut pieces = BTreeSet::new();
        for a in &self.cones {
            for b in &other.cones {
                pieces.insert(a.intersection(b)?);
            }
        }
        Fan::from_cones(self.ambient_dim, pieces)
    }
}

impl std::fmt::Debug for Fan {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Fan")
            .field("ambient_dim", &self.ambient_dim)
            .field("rays", &self.rays.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
            .field("lineality", &self.lineality.len())
            .field("maximal_cones", &self.maximal_cones)
            .finish()
    }
}
