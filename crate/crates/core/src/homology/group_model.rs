use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use super::equivariant::EquivariantChainComplex;
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Presentation};
use crate::linalg::{ChainComplexR, MatrixR, ModulePresentation};
use crate::rings::RingSpec;

/// How the homology of a group is computed.
#[derive(Clone, Debug)]
pub enum Realization {
    /// Finite group, resolved through its Cayley table.
    Finite(Arc<FiniteGroup>),
    /// The presentation complex is asserted to be aspherical.
    Aspherical,
}

/// Which tier was used, for reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tier {
    Finite,
    Aspherical,
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tier::Finite => write!(f, "finite"),
            Tier::Aspherical => write!(f, "aspherical"),
        }
    }
}

/// A presented group together with a way to compute its homology.
#[derive(Clone, Debug)]
pub struct GroupModel {
    presentation: Presentation,
    realization: Realization,
    resolution: OnceLock<EquivariantChainComplex>,
}

impl GroupModel {
    /// Enumerates the group; infinite groups (or too small a budget) are
    /// rejected.
    pub fn finite(p: &Presentation, max_cosets: usize) -> Result<Self> {
        let g = FiniteGroup::enumerate(p, max_cosets).map_err(|o| {
            Error::TierRejection(format!("{o}; the group is infinite or needs a larger budget, and is not flagged aspherical"))
        })?;
        Ok(GroupModel::from_group(p, Arc::new(g)))
    }

    pub fn from_group(p: &Presentation, g: Arc<FiniteGroup>) -> Self {
        GroupModel { presentation: p.clone(), realization: Realization::Finite(g), resolution: OnceLock::new() }
    }

    /// Takes the presentation complex as a model of the classifying space.
    pub fn aspherical(p: &Presentation) -> Self {
        GroupModel { presentation: p.clone(), realization: Realization::Aspherical, resolution: OnceLock::new() }
    }

    /// Aspherical when flagged, otherwise finite by enumeration.
    pub fn realize(p: &Presentation, aspherical: bool, max_cosets: usize) -> Result<Self> {
        if aspherical {
            Ok(GroupModel::aspherical(p))
        } else {
            GroupModel::finite(p, max_cosets)
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn tier(&self) -> Tier {
        match self.realization {
            Realization::Finite(_) => Tier::Finite,
            Realization::Aspherical => Tier::Aspherical,
        }
    }

    pub fn finite_group(&self) -> Option<&Arc<FiniteGroup>> {
        match &self.realization {
            Realization::Finite(g) => Some(g),
            Realization::Aspherical => None,
        }
    }

    pub fn require_finite(&self) -> Result<&Arc<FiniteGroup>> {
        self.finite_group().ok_or_else(|| Error::TierRejection("this computation needs a finite group".into()))
    }

    /// Element of each generator (finite tier).
    pub fn generator_elements(&self) -> Result<Vec<usize>> {
        let g = self.require_finite()?;
        Ok((0..self.presentation.num_gens()).map(|j| g.generator(j)).collect())
    }

    /// A free resolution prefix of `Z` over `Z[G]` in degrees `0..=3`,
    /// computed once and cached.
    pub fn resolution(&self) -> Result<&EquivariantChainComplex> {
        if let Some(r) = self.resolution.get() {
            return Ok(r);
        }
        let g = self.require_finite()?;
        let gens = self.generator_elements()?;
        let e = EquivariantChainComplex::from_presentation(
            g.clone(),
            self.presentation.num_gens(),
            self.presentation.relators(),
            &gens,
        )?;
        let r = e.extend_to_degree3()?;
        Ok(self.resolution.get_or_init(|| r))
    }

    /// Chains computing `H_q(G; R)` for `q <= 2` with trivial coefficients.
    pub fn trivial_complex(&self, ring: &RingSpec) -> Result<ChainComplexR> {
        match &self.realization {
            Realization::Finite(_) => self.resolution()?.augmented(ring),
            Realization::Aspherical => presentation_chains(&self.presentation, &[], ring),
        }
    }

    pub fn homology(&self, ring: &RingSpec, q: usize) -> Result<ModulePresentation> {
        if q > 2 {
            return Err(Error::Unsupported(format!("group homology in degree {q}")));
        }
        Ok(self.trivial_complex(ring)?.homology(q))
    }
}

/// Cellular chains of a presentation complex with trivial coefficients:
/// `d_1 = 0` and `d_2` the transposed exponent-sum matrix.
pub fn presentation_chains(p: &Presentation, extra: &[crate::groups::Word], ring: &RingSpec) -> Result<ChainComplexR> {
    let cells: Vec<_> = p.relators().iter().chain(extra).collect();
    let g = p.num_gens();
    let d1 = MatrixR::zeros(ring, 1, g);
    let d2 = MatrixR::from_fn(ring, g, cells.len(), |j, r| ring.from_i64(cells[r].exponent_sum(j)));
    ChainComplexR::new(ring, vec![1, g, cells.len()], vec![d1, d2])
}

/// `H_q(G; R)` for `q` in `0..=2`.
pub fn group_homology(g: &GroupModel, ring: &RingSpec, q: usize) -> Result<ModulePresentation> {
    g.homology(ring, q)
}
