//! The exact sequence `H_2(X~) ⊗_{Z[G]} R -> H_2(X; R) -> H_2(G; R) -> 0`
//! for `G = pi_1(X)` finite.

use std::sync::Arc;

use serde::Serialize;

use super::equivariant::{translate, EquivariantChainComplex};
use super::group_model::GroupModel;
use super::lift::lift_chain_map;
use super::space::{Coefficients, SpaceModel};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::{is_exact_at, smith_normal_form, HomologyMap, MatrixR, ModulePresentation, Subquotient};
use crate::rings::{Elem, RingSpec};

/// The three modules, the two maps, and the verdicts.
#[derive(Clone, Debug, Serialize)]
pub struct HopfCertificate {
    pub ring: RingSpec,
    /// `H_2(X~) ⊗_{Z[G]} R`, `H_2(X; R)`, `H_2(G; R)`.
    pub modules: [ModulePresentation; 3],
    #[serde(skip)]
    pub maps: [HomologyMap; 2],
    pub exact_middle: bool,
    pub surjective_right: bool,
}

impl HopfCertificate {
    pub fn is_exact(&self) -> bool {
        self.exact_middle && self.surjective_right
    }
}

/// Checks the sequence for `space`, enumerating `pi_1` within `max_cosets`.
pub fn hopf_check(space: &SpaceModel, coeffs: &Coefficients, max_cosets: usize) -> Result<HopfCertificate> {
    let Coefficients::Trivial(ring) = coeffs else {
        return Err(Error::Unsupported("the Hopf check takes trivial-action coefficients".into()));
    };
    let pi = space.fundamental_group();
    let model = GroupModel::finite(&pi, max_cosets)?;
    let g = model.require_finite()?.clone();
    let elems = model.generator_elements()?;
    let e = EquivariantChainComplex::from_presentation(g.clone(), pi.num_gens(), &space.cells2(), &elems)?;
    hopf_from_chains(&e, &model, &elems, ring)
}

fn hopf_from_chains(
    e: &EquivariantChainComplex,
    model: &GroupModel,
    elems: &[usize],
    ring: &RingSpec,
) -> Result<HopfCertificate> {
    let g: &Arc<FiniteGroup> = e.group();
    let n = g.order();
    let z = RingSpec::Integers;

    // H_2 of the cover: the integer kernel of the blown-up d_2.
    let d2 = e.boundary(2).blowup(g);
    let s = smith_normal_form(&d2);
    let kernel = s.kernel_basis();
    let k = kernel.cols();
    let coords = s.v_inv.select_rows(s.rank()..d2.cols());

    // Coinvariants: R^k modulo (T_g - 1) for the generators.
    let mut relation_cols = Vec::new();
    for &x in elems {
        for i in 0..k {
            let moved = coords.mul_vec(&translate(&kernel.column(i), x, g))?;
            let mut col: Vec<Elem> = moved;
            col[i] = z.sub(&col[i], &z.one());
            relation_cols.push(col);
        }
    }
    let relations = MatrixR::from_columns(&z, k, &relation_cols).change_ring(ring)?;
    let id = MatrixR::identity(ring, k);
    let coinv = Subquotient::from_kernel(ring, k, id.clone(), id, &relations);

    // Augmenting cover cycles gives cycles of X.
    let cells2 = e.cells()[2];
    let aug = MatrixR::from_fn(&z, cells2, cells2 * n, |i, j| if j / n == i { z.one() } else { z.zero() });
    let to_x = aug.mul(&kernel)?.change_ring(ring)?;
    let x_chains = e.augmented(ring)?;
    let h2x = x_chains.subquotient(2);
    let first = HomologyMap::induced(&coinv, &h2x, &to_x)?;

    let resolution = model.resolution()?;
    let f = lift_chain_map(e, resolution)?;
    let fr = f.augmented(ring)?;
    let h2g = fr.target().subquotient(2);
    let second = HomologyMap::induced(&h2x, &h2g, &fr.component(2))?;

    let exact_middle = is_exact_at(&first, &second)?;
    let surjective_right = second.is_surjective();
    Ok(HopfCertificate {
        ring: ring.clone(),
        modules: [coinv.module().clone(), h2x.module().clone(), h2g.module().clone()],
        maps: [first, second],
        exact_middle,
        surjective_right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{Presentation, Word};

    fn space(names: &[&str], rels: Vec<Word>, extras: Vec<Word>) -> SpaceModel {
        let p = Presentation::new(names.iter().map(|s| s.to_string()).collect(), rels).unwrap();
        SpaceModel::new(p, extras, false).unwrap()
    }

    #[test]
    fn cyclic_five() {
        let x = space(&["a"], vec![Word::from_powers(&[(0, 5)])], vec![]);
        let c = hopf_check(&x, &Coefficients::Trivial(RingSpec::Integers), 100).unwrap();
        assert!(c.is_exact());
        assert!(c.modules[1].is_zero() && c.modules[2].is_zero());
    }

    #[test]
    fn klein_four() {
        let x = space(
            &["a", "b"],
            vec![
                Word::from_powers(&[(0, 2)]),
                Word::from_powers(&[(1, 2)]),
                Word::from_powers(&[(0, 1), (1, 1), (0, -1), (1, -1)]),
            ],
            vec![],
        );
        let c = hopf_check(&x, &Coefficients::Trivial(RingSpec::Integers), 100).unwrap();
        assert!(c.is_exact());
        assert_eq!(c.modules[2].to_string(), "Z/2");
    }

    #[test]
    fn simply_connected_with_sphere() {
        let x = space(&["a"], vec![Word::gen(0)], vec![Word::empty()]);
        let c = hopf_check(&x, &Coefficients::Trivial(RingSpec::mod_p(3).unwrap()), 100).unwrap();
        assert!(c.is_exact());
        assert!(c.modules[2].is_zero());
        assert_eq!(c.modules[1].to_string(), "Z/3");
    }
}
