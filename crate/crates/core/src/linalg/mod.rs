//! Exact linear algebra over the Euclidean rings.

mod complex;
mod matrix;
mod module;
mod snf;

pub use complex::{induced_homology_map, is_exact_at, ChainComplexR, ChainMapR, HomologyMap, MapFlags, Subquotient};
pub use matrix::MatrixR;
pub use module::{cokernel, module_iso_test, ModulePresentation};
pub use snf::{inverse, kernel_basis, smith_normal_form, solve, SmithForm};
