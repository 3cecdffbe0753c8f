//! `H_2(pi) -> H_2(pi/N) -> N/[pi,N] -> H_1(pi) -> H_1(pi/N) -> 0` over `Z`,
//! with the middle term read off the mapping cone of the quotient map.

use serde::Serialize;

use super::group_model::GroupModel;
use super::lift::group_chain_map;
use crate::error::{Error, Result};
use crate::groups::{GroupHom, Word};
use crate::linalg::{is_exact_at, ChainComplexR, ChainMapR, HomologyMap, MatrixR, ModulePresentation};
use crate::rings::RingSpec;

#[derive(Clone, Debug, Serialize)]
pub struct FiveTermReport {
    /// `H_2(pi)`, `H_2(Q)`, `N/[pi,N]`, `H_1(pi)`, `H_1(Q)`.
    pub modules: [ModulePresentation; 5],
    #[serde(skip)]
    pub maps: [HomologyMap; 4],
    /// Exactness at `H_2(Q)`, `N/[pi,N]`, `H_1(pi)`, and `H_1(Q)` (the last
    /// one is surjectivity onto `H_1(Q)`).
    pub joints: [bool; 4],
}

impl FiveTermReport {
    pub fn middle(&self) -> &ModulePresentation {
        &self.modules[2]
    }

    pub fn is_exact(&self) -> bool {
        self.joints.iter().all(|&j| j)
    }

    /// `N = [pi, N]`, i.e. the middle term vanishes.
    pub fn relatively_perfect(&self) -> bool {
        self.middle().is_zero()
    }
}

/// The quotient map `pi -> pi/N` on trivial-coefficient chains, as a chain map
/// from a complex computing `H_{<=2}(pi)` to a resolution prefix of `pi/N`.
pub fn quotient_chain_map(pi: &GroupModel, n_gens: &[Word], max_cosets: usize) -> Result<ChainMapR> {
    let z = RingSpec::Integers;
    let p = pi.presentation();
    for w in n_gens {
        p.check_word(w)?;
    }
    if n_gens.iter().all(Word::is_empty) {
        let c = pi.trivial_complex(&z)?;
        return Ok(ChainMapR::identity(&c));
    }
    let q = GroupModel::finite(&p.quotient(n_gens)?, max_cosets)?;
    let alpha = GroupHom::quotient(p, n_gens)?;
    group_chain_map(pi, &alpha, &q)?.augmented(&z)
}

/// Computes all five terms and checks exactness at every joint.
pub fn five_term(pi: &GroupModel, n_gens: &[Word], max_cosets: usize) -> Result<FiveTermReport> {
    let f = quotient_chain_map(pi, n_gens, max_cosets)?;
    let z = RingSpec::Integers;
    let (a, b) = (f.source(), f.target());
    if a.top() < 2 || b.top() < 2 {
        return Err(Error::MalformedComplex("five-term sequence needs chains through degree 2".into()));
    }
    // Cone degrees 1..=3 only see A_0..A_2.
    let f2 = ChainMapR::new(a.truncate(2), b.clone(), f.components()[..3].to_vec())?;
    let cone = ChainComplexR::mapping_cone(&f2)?;

    let (h2a, h2b, h1a, h1b) = (a.subquotient(2), b.subquotient(2), a.subquotient(1), b.subquotient(1));
    let h2c = cone.subquotient(2);
    let (a1, b2) = (a.rank(1), b.rank(2));

    let h2f = HomologyMap::induced(&h2a, &h2b, &f.component(2))?;
    let include = MatrixR::from_fn(&z, a1 + b2, b2, |i, j| if i == a1 + j { z.one() } else { z.zero() });
    let incl = HomologyMap::induced(&h2b, &h2c, &include)?;
    let project = MatrixR::from_fn(&z, a1, a1 + b2, |i, j| if i == j { z.one() } else { z.zero() });
    let proj = HomologyMap::induced(&h2c, &h1a, &project)?;
    let h1f = HomologyMap::induced(&h1a, &h1b, &f.component(1))?;

    let joints = [is_exact_at(&h2f, &incl)?, is_exact_at(&incl, &proj)?, is_exact_at(&proj, &h1f)?, h1f.is_surjective()];
    Ok(FiveTermReport {
        modules: [h2a.module().clone(), h2b.module().clone(), h2c.module().clone(), h1a.module().clone(), h1b.module().clone()],
        maps: [h2f, incl, proj, h1f],
        joints,
    })
}
