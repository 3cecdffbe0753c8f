//! Exact cellular-chain engine for the generalized plus-construction.
//!
//! The crate is layered bottom-up:
//!
//! * [`rings`]: exact Euclidean coefficient rings and group rings.
//! * [`linalg`]: Smith normal form, kernels, chain complexes, induced maps.
//! * [`groups`]: words, Fox calculus, coset enumeration, homomorphisms.
//! * [`homology`]: equivariant chains of presentation complexes, group
//!   homology, Hopf and five-term sequence checks.
//! * [`gdense`]: the matrix criterion for G-dense rings and basis extraction.
//! * [`plus`]: the plus-construction pipeline and its decision procedures.
//! * [`parse`]: the text grammars for groups, homomorphisms, spaces,
//!   matrices, and rings.

pub mod error;
pub mod gdense;
pub mod groups;
pub mod homology;
pub mod linalg;
pub mod parse;
pub mod plus;
pub mod rings;

pub use error::{Error, Result};
