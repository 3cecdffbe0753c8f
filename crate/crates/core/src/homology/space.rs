use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::equivariant::EquivariantChainComplex;
use super::group_model::presentation_chains;
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, GroupHom, Presentation, Word};
use crate::linalg::{ChainComplexR, ModulePresentation};
use crate::rings::RingSpec;

/// A presentation complex, possibly with extra 2-cells (the empty word
/// attaches a sphere).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceModel {
    base: Presentation,
    extra_cells: Vec<Word>,
    aspherical: bool,
}

impl SpaceModel {
    pub fn new(base: Presentation, extra_cells: Vec<Word>, aspherical: bool) -> Result<Self> {
        for w in &extra_cells {
            base.check_word(w)?;
        }
        if aspherical && !extra_cells.is_empty() {
            return Err(Error::InvalidPresentation("the aspherical flag needs a space without extra cells".into()));
        }
        Ok(SpaceModel { base, extra_cells, aspherical })
    }

    /// A single point.
    pub fn point() -> Self {
        SpaceModel { base: Presentation::trivial(), extra_cells: Vec::new(), aspherical: false }
    }

    pub fn base(&self) -> &Presentation {
        &self.base
    }

    pub fn extra_cells(&self) -> &[Word] {
        &self.extra_cells
    }

    pub fn is_aspherical(&self) -> bool {
        self.aspherical
    }

    /// All 2-cells: relators first, then extra cells.
    pub fn cells2(&self) -> Vec<Word> {
        self.base.relators().iter().chain(&self.extra_cells).cloned().collect()
    }

    /// Cell counts in degrees 0, 1, 2.
    pub fn cell_counts(&self) -> [usize; 3] {
        [1, self.base.num_gens(), self.base.relators().len() + self.extra_cells.len()]
    }

    /// `pi_1` of the space: every 2-cell is a relator.
    pub fn fundamental_group(&self) -> Presentation {
        self.base.quotient(&self.extra_cells).expect("extra cells are valid words")
    }

    /// Cellular chains with trivial coefficients.
    pub fn chains(&self, ring: &RingSpec) -> Result<ChainComplexR> {
        presentation_chains(&self.base, &self.extra_cells, ring)
    }
}

impl fmt::Display for SpaceModel {
    /// The `space { group: ...; cells2: ...; aspherical: ... }` literal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "space {{ group: {}; cells2:", self.base)?;
        for w in &self.extra_cells {
            write!(f, " {}", w.display(self.base.names()))?;
        }
        write!(f, "; aspherical: {} }}", self.aspherical)
    }
}

/// The presentation complex of `p` with extra 2-cells.
pub fn build_presentation_complex(p: &Presentation, extras: &[Word]) -> Result<SpaceModel> {
    SpaceModel::new(p.clone(), extras.to_vec(), false)
}

/// Chains of the cover of `space` induced by `alpha`, over the finite group
/// `target`.
pub fn equivariant_chains(space: &SpaceModel, alpha: &GroupHom, target: &Arc<FiniteGroup>) -> Result<EquivariantChainComplex> {
    if alpha.source().num_gens() != space.base.num_gens() {
        return Err(Error::InvalidHom("homomorphism source does not match the space".into()));
    }
    let elems: Vec<usize> = alpha.images().iter().map(|w| target.evaluate(w)).collect();
    let cells = space.cells2();
    for (i, w) in cells.iter().enumerate() {
        let e = super::equivariant::prefix_elements(target, w, &elems);
        if *e.last().unwrap() != 0 {
            return Err(Error::InvalidHom(format!("2-cell {i} does not map to the identity")));
        }
    }
    EquivariantChainComplex::from_presentation(target.clone(), space.base.num_gens(), &cells, &elems)
}

/// Coefficients for homology of spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    /// A ring with trivial action.
    Trivial(RingSpec),
    /// `k[G]` for a field `k`, `G` the group of the equivariant complex.
    GroupRing(RingSpec),
}

impl Coefficients {
    pub fn base(&self) -> &RingSpec {
        match self {
            Coefficients::Trivial(r) | Coefficients::GroupRing(r) => r,
        }
    }

    /// Chains of `e` with these coefficients.
    pub fn chains(&self, e: &EquivariantChainComplex) -> Result<ChainComplexR> {
        match self {
            Coefficients::Trivial(r) => e.augmented(r),
            Coefficients::GroupRing(k) => {
                if !k.is_field() {
                    return Err(Error::Unsupported(format!("group-ring coefficients over {k}, which is not a field")));
                }
                e.blown_up(k)
            }
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Trivial(r) => write!(f, "{r}"),
            Coefficients::GroupRing(k) => write!(f, "{k}[G]"),
        }
    }
}

impl FromStr for Coefficients {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.strip_suffix("[G]") {
            Some(k) => Ok(Coefficients::GroupRing(k.parse()?)),
            None => Ok(Coefficients::Trivial(t.parse()?)),
        }
    }
}

impl Serialize for Coefficients {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Coefficients {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Anything with cellular chains.
pub trait CellularChains {
    fn chains_with(&self, coeffs: &Coefficients) -> Result<ChainComplexR>;
}

impl CellularChains for SpaceModel {
    fn chains_with(&self, coeffs: &Coefficients) -> Result<ChainComplexR> {
        match coeffs {
            Coefficients::Trivial(r) => self.chains(r),
            Coefficients::GroupRing(_) => {
                Err(Error::Unsupported("group-ring coefficients need an equivariant complex over a finite group".into()))
            }
        }
    }
}

impl CellularChains for EquivariantChainComplex {
    fn chains_with(&self, coeffs: &Coefficients) -> Result<ChainComplexR> {
        coeffs.chains(self)
    }
}

/// Homology in every degree of the complex.
pub fn space_homology<T: CellularChains + ?Sized>(x: &T, coeffs: &Coefficients) -> Result<Vec<ModulePresentation>> {
    Ok(x.chains_with(coeffs)?.homology_all())
}
