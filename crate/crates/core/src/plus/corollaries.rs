use super::hypotheses::check_hypotheses;
use super::pipeline::{plus_construction, PlusOutcome};
use crate::error::{Error, Result};
use crate::groups::{GroupHom, Presentation, Word};
use crate::homology::{five_term, Coefficients, FiveTermReport, GroupModel, SpaceModel, Tier};
use crate::rings::RingSpec;

/// A Moore space `M(G, 1; R)`: the pipeline from a point. Rejected exactly
/// when `H_2(G; R)` is nonzero; the report carries that module.
pub fn moore_space(g: &GroupModel, ring: &RingSpec, max_cosets: usize) -> Result<PlusOutcome> {
    let alpha = GroupHom::new(Presentation::trivial(), g.presentation().clone(), Vec::new())?;
    plus_construction(&SpaceModel::point(), &alpha, &[], g, &Coefficients::Trivial(ring.clone()), max_cosets)
}

/// Whether `N = [pi, N]`, decided as injectivity on `H_1` and surjectivity on
/// `H_2` of `pi -> pi/N`.
pub fn relatively_perfect(pi: &GroupModel, n_gens: &[Word], max_cosets: usize) -> Result<(bool, FiveTermReport)> {
    let report = five_term(pi, n_gens, max_cosets)?;
    let verdict = report.maps[3].is_injective() && report.maps[0].is_surjective();
    Ok((verdict, report))
}

/// Partial `k`-completion along `pi -> pi/P` with coefficients `k[pi/P]`.
///
/// `P` (normally generated by `p_gens`) must be `k`-perfect; this is checked
/// as `H_1(pi; k[pi/P]) = H_1(P; k) = 0`. Maximality of `P` is not checked.
pub fn partial_completion(pi: &GroupModel, p_gens: &[Word], k: &RingSpec, max_cosets: usize) -> Result<PlusOutcome> {
    if !k.is_field() {
        return Err(Error::Unsupported(format!("partial completion needs a field, got {k}")));
    }
    let p = pi.presentation();
    let q = GroupModel::finite(&p.quotient(p_gens)?, max_cosets)?;
    let alpha = GroupHom::quotient(p, p_gens)?;
    let x = SpaceModel::new(p.clone(), Vec::new(), pi.tier() == Tier::Aspherical)?;
    let coeffs = Coefficients::GroupRing(k.clone());
    let h = check_hypotheses(&x, &alpha, &q, &coeffs, max_cosets)?;
    if !h.h1_modules[0].is_zero() {
        return Err(Error::Hypothesis(format!("the subgroup is not {k}-perfect: H_1 = {}", h.h1_modules[0])));
    }
    plus_construction(&x, &alpha, p_gens, &q, &coeffs, max_cosets)
}
