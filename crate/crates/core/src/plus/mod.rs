//! The plus-construction pipeline: hypotheses, the space `W` with
//! `pi_1(W) = G`, spherical 3-cells, and certificates; with Moore spaces,
//! relatively perfect subgroups and partial completion on top.

mod build;
mod corollaries;
mod hypotheses;
mod pipeline;

pub use build::{build_w, CellLedger, LedgerCell, Provenance, WModel};
pub use corollaries::{moore_space, partial_completion, relatively_perfect};
pub use hypotheses::{check_hypotheses, fundamental_group_model, Gate, HypothesesReport};
pub use pipeline::{plus_construction, Certificate, PlusOutcome, PlusResult};
