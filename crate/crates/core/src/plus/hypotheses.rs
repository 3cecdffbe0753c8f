use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::GroupHom;
use crate::homology::{group_chain_map, Coefficients, GroupModel, SpaceModel, Tier};
use crate::linalg::{induced_homology_map, ChainComplexR, ChainMapR, HomologyMap, MapFlags, ModulePresentation};
use crate::rings::RingSpec;

/// Which argument makes the relative second homology free.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "gate", rename_all = "kebab-case")]
pub enum Gate {
    /// A principal ideal domain.
    Pid,
    /// `k[G]` with `H_1(G, pi; k[G]) = 0`.
    RelH1Zero,
    Rejected {
        reason: String,
    },
}

/// Injectivity on `H_1`, surjectivity on `H_2`, and the coefficient gate.
#[derive(Clone, Debug, Serialize)]
pub struct HypothesesReport {
    pub coefficients: Coefficients,
    /// Tier of `pi_1(X)`.
    pub tier: Tier,
    /// `H_1(pi; R)`, `H_1(G; R)`.
    pub h1_modules: [ModulePresentation; 2],
    /// `H_2(pi; R)`, `H_2(G; R)`.
    pub h2_modules: [ModulePresentation; 2],
    pub h1: MapFlags,
    pub h2: MapFlags,
    pub gate: Gate,
    #[serde(skip)]
    pub maps: [HomologyMap; 2],
}

impl HypothesesReport {
    pub fn h1_injective(&self) -> bool {
        self.h1.injective
    }

    pub fn h2_surjective(&self) -> bool {
        self.h2.surjective
    }

    pub fn passes(&self) -> bool {
        self.h1_injective() && self.h2_surjective() && !matches!(self.gate, Gate::Rejected { .. })
    }
}

/// The group of `X`, finite by enumeration or aspherical by flag.
pub fn fundamental_group_model(x: &SpaceModel, max_cosets: usize) -> Result<GroupModel> {
    GroupModel::realize(&x.fundamental_group(), x.is_aspherical(), max_cosets)
}

/// `C_*(pi) -> C_*(G)` with the given coefficients.
pub(crate) fn coefficient_map(pi: &GroupModel, alpha: &GroupHom, g: &GroupModel, coeffs: &Coefficients) -> Result<ChainMapR> {
    let f = group_chain_map(pi, alpha, g)?;
    match coeffs {
        Coefficients::Trivial(r) => f.augmented(r),
        Coefficients::GroupRing(k) => f.blown_up(k),
    }
}

fn gate(f: &ChainMapR, coeffs: &Coefficients, g: &GroupModel) -> Result<Gate> {
    Ok(match coeffs {
        Coefficients::Trivial(RingSpec::Gaussian) => {
            Gate::Rejected { reason: "Z[i] receives no ring map from Z[G] that makes it G-dense".into() }
        }
        Coefficients::Trivial(_) => Gate::Pid,
        Coefficients::GroupRing(k) if !k.is_field() => {
            Gate::Rejected { reason: format!("group-ring coefficients need a field, got {k}") }
        }
        Coefficients::GroupRing(_) => {
            let cone = ChainComplexR::mapping_cone(f)?;
            let h1 = cone.homology(1);
            if h1.is_zero() {
                Gate::RelH1Zero
            } else if g.require_finite()?.order() == 1 {
                // k[1] = k is a field
                Gate::Pid
            } else {
                Gate::Rejected { reason: format!("H_1(G, pi; k[G]) = {h1} is not zero") }
            }
        }
    })
}

/// Checks that `alpha : pi_1(X) -> G` is injective on `H_1` and surjective on
/// `H_2` with coefficients `coeffs`, and that the coefficients pass the gate.
pub fn check_hypotheses(
    x: &SpaceModel,
    alpha: &GroupHom,
    g: &GroupModel,
    coeffs: &Coefficients,
    max_cosets: usize,
) -> Result<HypothesesReport> {
    if alpha.source().num_gens() != x.base().num_gens() {
        return Err(Error::InvalidHom("homomorphism source does not match the space".into()));
    }
    let pi = fundamental_group_model(x, max_cosets)?;
    let f = coefficient_map(&pi, alpha, g, coeffs)?;
    let (m1, h1) = induced_homology_map(&f, 1)?;
    let (m2, h2) = induced_homology_map(&f, 2)?;
    let modules = |q: usize| [f.source().homology(q), f.target().homology(q)];
    Ok(HypothesesReport {
        coefficients: coeffs.clone(),
        tier: pi.tier(),
        h1_modules: modules(1),
        h2_modules: modules(2),
        h1,
        h2,
        gate: gate(&f, coeffs, g)?,
        maps: [m1, m2],
    })
}
