//! Equivariant cellular chains, group homology, and the exact-sequence checks.

mod equivariant;
mod five_term;
mod group_model;
mod hopf;
mod lift;
mod space;

pub use equivariant::{from_blown, to_blown, translate, EquivariantChainComplex, GroupMatrix};
pub use five_term::{five_term, quotient_chain_map, FiveTermReport};
pub use group_model::{group_homology, presentation_chains, GroupModel, Realization, Tier};
pub use hopf::{hopf_check, HopfCertificate};
pub use lift::{blown_component, element_map, group_chain_map, lift_chain_map, push_forward, EquivariantChainMap};
pub use space::{build_presentation_complex, equivariant_chains, space_homology, CellularChains, Coefficients, SpaceModel};
