//! G-dense rings: the matrix criterion, the Gaussian-integer refutation, and
//! basis extraction through `Z[G]`.
//!
//! A ring is modelled as `k[H]` for a coefficient ring `k` and a finite group
//! `H` (trivial for a constant ring), with `phi : Z[G] -> k[H]` induced by an
//! element map `G -> H`.

mod criterion;
mod extract;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, GroupHom};
use crate::rings::{Elem, GroupRingElement, RingSpec};

pub use criterion::{gaussian_refuter, matrix_criterion, CriterionVerdict, UnitCase};
pub use extract::{extract_basis, standard_coefficients, Extraction};

/// A ring `k[H]` with `phi : Z[G] -> k[H]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseRingSpec {
    coeff: RingSpec,
    /// `G`, the group whose integral group ring maps in.
    source: Arc<FiniteGroup>,
    /// `H`; trivial for a constant ring.
    target: Arc<FiniteGroup>,
    /// `phi` on group elements.
    map: Vec<usize>,
}

impl DenseRingSpec {
    /// `k` with the trivial action of `G`.
    pub fn constant(coeff: &RingSpec, group: Arc<FiniteGroup>) -> Self {
        let map = vec![0; group.order()];
        DenseRingSpec { coeff: coeff.clone(), source: group, target: Arc::new(FiniteGroup::trivial()), map }
    }

    /// `k[G]` with `phi` the identity on `G`.
    pub fn group_ring(coeff: &RingSpec, group: Arc<FiniteGroup>) -> Self {
        let map = (0..group.order()).collect();
        DenseRingSpec { coeff: coeff.clone(), source: group.clone(), target: group, map }
    }

    pub fn coeff(&self) -> &RingSpec {
        &self.coeff
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn element_map(&self) -> &[usize] {
        &self.map
    }

    /// Whether `H` is trivial, so the ring is just `k`.
    pub fn is_constant(&self) -> bool {
        self.target.order() == 1
    }

    /// `phi(a)` for `a` in `Z[G]`.
    pub fn phi(&self, a: &GroupRingElement) -> Result<GroupRingElement> {
        if a.order() != self.source.order() || a.base() != &RingSpec::Integers {
            return Err(Error::Shape("phi takes an element of Z[G]".into()));
        }
        let terms = a.terms().map(|(g, c)| (self.map[g], self.coeff.from_int(int(c))));
        GroupRingElement::from_terms(&self.coeff, self.target.order(), terms)
    }

    /// Some `g` in `G` with `phi(g) = h`; the first in element order.
    pub fn section(&self, h: usize) -> Result<usize> {
        self.map.iter().position(|&x| x == h).ok_or_else(|| Error::Hypothesis(format!("phi does not hit group element {h}")))
    }

    /// Elementwise surjectivity of `G -> H`.
    pub fn is_onto(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        self.map.iter().for_each(|&h| hit[h] = true);
        hit.into_iter().all(|b| b)
    }
}

/// `(R, phi ∘ psi)` for a quotient `psi : G -> spec.source()`.
pub fn induced_spec(spec: &DenseRingSpec, quotient: &GroupHom, group: Arc<FiniteGroup>) -> Result<DenseRingSpec> {
    if quotient.target().num_gens() != spec.source.table().num_gens() {
        return Err(Error::InvalidHom("quotient does not land in the group of the ring".into()));
    }
    if !quotient.is_surjective_onto(&spec.source) {
        return Err(Error::Hypothesis("the map to the quotient is not surjective".into()));
    }
    let psi = crate::homology::element_map(quotient, &group, &spec.source)?;
    let map = psi.iter().map(|&g| spec.map[g]).collect();
    Ok(DenseRingSpec { coeff: spec.coeff.clone(), source: group, target: spec.target.clone(), map })
}

fn int(e: &Elem) -> &num_bigint::BigInt {
    match e {
        Elem::Int(n) => n,
        _ => unreachable!("integral group ring"),
    }
}

/// Which lifting argument applies to the coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiftCase {
    /// `Z`: coefficients are already integers.
    Direct,
    /// `Z/p`: residues lift to integers.
    Residue,
    /// Subrings of `Q`: denominators are cleared by a unit.
    ClearDenominators,
}

impl LiftCase {
    pub fn of(ring: &RingSpec) -> Result<LiftCase> {
        match ring {
            RingSpec::Integers => Ok(LiftCase::Direct),
            RingSpec::ModP(_) => Ok(LiftCase::Residue),
            RingSpec::Rationals | RingSpec::Localized(_) => Ok(LiftCase::ClearDenominators),
            RingSpec::Gaussian => Err(Error::Unsupported("Z[i] is not a quotient of any Z[G]".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{Presentation, Word};

    fn cyclic(n: i64) -> (Presentation, Arc<FiniteGroup>) {
        let p = Presentation::new(vec!["a".into()], vec![Word::from_powers(&[(0, n)])]).unwrap();
        let g = Arc::new(FiniteGroup::enumerate(&p, 100).unwrap());
        (p, g)
    }

    #[test]
    fn composed_phi() {
        let (p6, g6) = cyclic(6);
        let (p3, g3) = cyclic(3);
        let (p1, g1) = cyclic(1);
        let f2 = RingSpec::mod_p(2).unwrap();
        let over3 = DenseRingSpec::group_ring(&f2, g3.clone());
        let q = GroupHom::new(p6.clone(), p3.clone(), vec![Word::gen(0)]).unwrap();
        let over6 = induced_spec(&over3, &q, g6.clone()).unwrap();
        let a = g6.generator(0);
        assert_eq!(over6.element_map()[a], g3.generator(0));
        assert_eq!(over6.element_map()[g6.mul(a, g6.mul(a, a))], 0);

        // associativity through a constant ring
        let triv = DenseRingSpec::constant(&f2, g1);
        let q31 = GroupHom::new(p3, p1, vec![Word::empty()]).unwrap();
        let via3 = induced_spec(&induced_spec(&triv, &q31, g3.clone()).unwrap(), &q, g6.clone()).unwrap();
        assert_eq!(via3, DenseRingSpec::constant(&f2, g6));
    }
}
