//! Finitely presented groups: words, Fox calculus, coset enumeration,
//! homomorphisms.

mod finite;
mod fox;
mod hom;
mod presentation;
mod todd_coxeter;
mod word;

pub use finite::FiniteGroup;
pub(crate) use fox::fox_positions;
pub use fox::{fox_derivative, FoxTerm};
pub use hom::GroupHom;
pub use presentation::Presentation;
pub use todd_coxeter::{todd_coxeter, CayleyTable, Overflow};
pub use word::{Letter, Word, WordDisplay};

/// Default coset budget used by the pipelines.
pub const DEFAULT_MAX_COSETS: usize = 200_000;
