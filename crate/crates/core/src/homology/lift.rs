//! Chain maps between equivariant complexes, lifted degree by degree.

use std::sync::Arc;

use super::equivariant::{from_blown, to_blown, EquivariantChainComplex, GroupMatrix};
use super::group_model::{GroupModel, Realization};
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, GroupHom};
use crate::linalg::{smith_normal_form, ChainMapR, MatrixR};
use crate::rings::{GroupRingElement, RingSpec};

/// A `Z[G]`-linear chain map; `components[q]` sends degree-`q` cells of the
/// source to combinations of target cells.
#[derive(Clone, Debug)]
pub struct EquivariantChainMap {
    source: EquivariantChainComplex,
    target: EquivariantChainComplex,
    components: Vec<GroupMatrix>,
}

impl EquivariantChainMap {
    pub fn source(&self) -> &EquivariantChainComplex {
        &self.source
    }

    pub fn target(&self) -> &EquivariantChainComplex {
        &self.target
    }

    pub fn components(&self) -> &[GroupMatrix] {
        &self.components
    }

    /// Keeps the source (and the map) in degrees `0..=top`.
    pub fn truncate_source(&self, top: usize) -> EquivariantChainMap {
        let source = self.source.truncate(top);
        let components = self.components[..=source.top().min(self.components.len() - 1)].to_vec();
        EquivariantChainMap { source, target: self.target.clone(), components }
    }

    /// The induced map on `C ⊗_{Z[G]} R`.
    pub fn augmented(&self, ring: &RingSpec) -> Result<ChainMapR> {
        let comps = self.components.iter().map(|f| f.augmented(ring)).collect();
        ChainMapR::new(self.source.augmented(ring)?, self.target.augmented(ring)?, comps)
    }

    /// The induced map on `C ⊗_{Z[G]} k[G]`, over `k`.
    pub fn blown_up(&self, k: &RingSpec) -> Result<ChainMapR> {
        let g = self.source.group();
        let comps = self.components.iter().map(|f| f.blowup(g).change_ring(k)).collect::<Result<_>>()?;
        ChainMapR::new(self.source.blown_up(k)?, self.target.blown_up(k)?, comps)
    }
}

/// The element map `p ↦ alpha(rep(p))` from an enumerated source group.
pub fn element_map(alpha: &GroupHom, source: &FiniteGroup, target: &FiniteGroup) -> Result<Vec<usize>> {
    alpha.validate_with(target)?;
    Ok((0..source.order()).map(|p| target.evaluate(&alpha.apply(source.rep(p)))).collect())
}

/// Pushes a complex over `source.group()` forward along an element map into
/// `target`, i.e. `Z[H] ⊗_{Z[G]} C`.
pub fn push_forward(
    source: &EquivariantChainComplex,
    element_map: &[usize],
    target: &Arc<FiniteGroup>,
) -> Result<EquivariantChainComplex> {
    if element_map.len() != source.group().order() {
        return Err(Error::Shape("element map does not cover the source group".into()));
    }
    let bs = source.boundaries().iter().map(|d| d.push_forward(element_map, target.order())).collect();
    EquivariantChainComplex::new(target.clone(), source.cells().to_vec(), bs)
}

/// Lifts the identity on `Z` to a chain map `source -> target` over the same
/// group, solving `d'_q f_q = f_{q-1} d_q` on the integer blowup.
///
/// The target must be exact in degrees `1..top` (a resolution prefix); the
/// map is built up to the smaller of the two top degrees.
pub fn lift_chain_map(source: &EquivariantChainComplex, target: &EquivariantChainComplex) -> Result<EquivariantChainMap> {
    let group = source.group().clone();
    if group.as_ref() != target.group().as_ref() {
        return Err(Error::Shape("lifting needs both complexes over the same group".into()));
    }
    let n = group.order();
    let z = RingSpec::Integers;
    let f0 = GroupMatrix::from_columns(n, 1, vec![vec![GroupRingElement::monomial(&z, n, 0, z.one())?]]);
    let mut components = vec![f0];
    let top = source.top().min(target.top());
    for q in 1..=top {
        let rhs = components[q - 1].compose(source.boundary(q), &group)?;
        let s = smith_normal_form(&target.boundary(q).blowup(&group));
        let mut columns = Vec::with_capacity(rhs.cols());
        for j in 0..rhs.cols() {
            let b = to_blown(&rhs.column(j), n);
            let x = s.solve(&b).ok_or_else(|| Error::NoLift(format!("degree {q}, cell {j}")))?;
            columns.push(from_blown(&x, n));
        }
        components.push(GroupMatrix::from_columns(n, target.cells()[q], columns));
    }
    let map = EquivariantChainMap { source: source.clone(), target: target.clone(), components };
    map.verify()?;
    Ok(map)
}

impl EquivariantChainMap {
    fn verify(&self) -> Result<()> {
        let g = self.source.group();
        for q in 1..self.components.len() {
            let lhs = self.target.boundary(q).compose(&self.components[q], g)?;
            let rhs = self.components[q - 1].compose(self.source.boundary(q), g)?;
            if lhs != rhs {
                return Err(Error::Defect(format!("lifted map does not commute in degree {q}")));
            }
        }
        Ok(())
    }
}

/// Chains computing `H_*(pi)`, pushed to the finite group `G` along `alpha`
/// and lifted into the resolution of `G`.
pub fn group_chain_map(pi: &GroupModel, alpha: &GroupHom, g: &GroupModel) -> Result<EquivariantChainMap> {
    let target = g.require_finite()?.clone();
    alpha.validate_with(&target)?;
    let source = match pi.realization() {
        Realization::Finite(p) => push_forward(pi.resolution()?, &element_map(alpha, p, &target)?, &target)?,
        Realization::Aspherical => {
            let p = pi.presentation();
            let elems: Vec<usize> = alpha.images().iter().map(|w| target.evaluate(w)).collect();
            EquivariantChainComplex::from_presentation(target.clone(), p.num_gens(), p.relators(), &elems)?
        }
    };
    lift_chain_map(&source, g.resolution()?)
}

/// Integer matrix of `f_q` on blown coordinates.
pub fn blown_component(f: &EquivariantChainMap, q: usize) -> MatrixR {
    f.components[q].blowup(f.source.group())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{Presentation, Word};
    use crate::linalg::induced_homology_map;

    fn cyclic(n: i64) -> Presentation {
        Presentation::new(vec!["a".into()], vec![Word::from_powers(&[(0, n)])]).unwrap()
    }

    #[test]
    fn identity_lift() {
        let g = GroupModel::finite(&cyclic(4), 100).unwrap();
        let r = g.resolution().unwrap();
        let f = lift_chain_map(r, r).unwrap();
        let fz = f.augmented(&RingSpec::Integers).unwrap();
        for q in 0..=2 {
            assert!(induced_homology_map(&fz, q).unwrap().1.iso());
        }
    }

    #[test]
    fn quotient_four_to_two() {
        let p4 = cyclic(4);
        let g4 = GroupModel::finite(&p4, 100).unwrap();
        let g2 = GroupModel::finite(&cyclic(2), 100).unwrap();
        let alpha = GroupHom::new(p4.clone(), cyclic(2), vec![Word::gen(0)]).unwrap();
        let (s, t) = (g4.finite_group().unwrap(), g2.finite_group().unwrap());
        let em = element_map(&alpha, s, t).unwrap();
        let pushed = push_forward(g4.resolution().unwrap(), &em, t).unwrap();
        let f = lift_chain_map(&pushed, g2.resolution().unwrap()).unwrap();
        let fz = f.augmented(&RingSpec::Integers).unwrap();
        let (m, flags) = induced_homology_map(&fz, 1).unwrap();
        assert_eq!(m.source_relations.len(), 1);
        assert!(flags.surjective && !flags.injective);
    }
}
