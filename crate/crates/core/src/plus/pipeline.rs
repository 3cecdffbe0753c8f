use std::sync::Arc;

use serde::Serialize;

use super::build::{build_w, format_group_ring, CellLedger, WModel};
use super::hypotheses::{check_hypotheses, HypothesesReport};
use crate::error::{Error, Result};
use crate::gdense::{extract_basis, standard_coefficients, DenseRingSpec, Extraction};
use crate::groups::{FiniteGroup, GroupHom, Word};
use crate::homology::{
    equivariant_chains, from_blown, translate, Coefficients, EquivariantChainComplex, GroupModel, SpaceModel, Tier,
};
use crate::linalg::{induced_homology_map, module_iso_test, smith_normal_form, ChainMapR, MatrixR, ModulePresentation};
use crate::rings::{Elem, GroupRingElement, RingSpec};

/// One checked statement about `Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub name: String,
    pub degree: usize,
    pub source: String,
    pub target: String,
    pub passed: bool,
}

/// Everything produced by an accepted run.
#[derive(Clone, Debug, Serialize)]
pub struct PlusResult {
    pub tier: Tier,
    pub coefficients: Coefficients,
    pub hypotheses: HypothesesReport,
    /// Presentation of `pi_1(W)` with all 2-cells of `W`.
    pub w: SpaceModel,
    /// Cellular chains of the universal cover of `Y`.
    #[serde(skip)]
    pub y: EquivariantChainComplex,
    pub ledger: CellLedger,
    #[serde(skip)]
    pub extraction: Option<Extraction>,
    pub homology_x: Vec<ModulePresentation>,
    pub homology_y: Vec<ModulePresentation>,
    pub certificates: Vec<Certificate>,
    /// Cells of `Y` in degrees 0 to 3.
    pub cell_counts: [usize; 4],
    /// `Y` is `X` plus exactly the ledger cells.
    pub finite: bool,
}

impl PlusResult {
    pub fn all_certified(&self) -> bool {
        self.certificates.iter().all(|c| c.passed)
    }

    pub fn three_cells(&self) -> usize {
        self.cell_counts[3]
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum PlusOutcome {
    Accepted(Box<PlusResult>),
    Rejected(Box<HypothesesReport>),
}

impl PlusOutcome {
    pub fn accepted(&self) -> Option<&PlusResult> {
        match self {
            PlusOutcome::Accepted(r) => Some(r),
            PlusOutcome::Rejected(_) => None,
        }
    }

    pub fn hypotheses(&self) -> &HypothesesReport {
        match self {
            PlusOutcome::Accepted(r) => &r.hypotheses,
            PlusOutcome::Rejected(h) => h,
        }
    }
}

/// A basis of `H_2(W, X; R)` and the images of the integral 2-cycles of the
/// cover of `W` in it, as vectors over the ring of `spec`.
struct Relative {
    spec: DenseRingSpec,
    images: Vec<Vec<GroupRingElement>>,
    rank: usize,
}

fn relative_images(w: &WModel, cover_kernel: &MatrixR, group: &Arc<FiniteGroup>, coeffs: &Coefficients) -> Result<Relative> {
    let n = group.order();
    let [new1, new2] = w.new_cells();
    let [x1, x2] = w.x_cells;
    match coeffs {
        Coefficients::Trivial(r) => {
            let chains = w.space.chains(r)?;
            let d2 = chains.boundary(2);
            let rel = d2.select_rows(x1..x1 + new1).select_columns(x2..x2 + new2);
            let s = smith_normal_form(&rel);
            let rank = new2 - s.rank();
            let z = RingSpec::Integers;
            let mut images = Vec::with_capacity(cover_kernel.cols());
            for i in 0..cover_kernel.cols() {
                let v = cover_kernel.column(i);
                let projected: Vec<Elem> = (x2..x2 + new2)
                    .map(|c| v[c * n..(c + 1) * n].iter().fold(z.zero(), |acc, e| z.add(&acc, e)))
                    .map(|e| r.from_int(RingSpec::Integers.to_int(&e).as_ref().expect("integer chain")))
                    .collect();
                let coords = s.kernel_coords(&projected)?;
                images.push(coords.into_iter().map(|c| GroupRingElement::monomial(r, 1, 0, c)).collect::<Result<_>>()?);
            }
            Ok(Relative { spec: DenseRingSpec::constant(r, group.clone()), images, rank })
        }
        Coefficients::GroupRing(k) => {
            if new1 != 0 {
                return Err(Error::Defect("group-ring coefficients with new 1-cells".into()));
            }
            let mut images = Vec::with_capacity(cover_kernel.cols());
            for i in 0..cover_kernel.cols() {
                let v = cover_kernel.column(i);
                let img = (x2..x2 + new2)
                    .map(|c| {
                        let terms = v[c * n..(c + 1) * n]
                            .iter()
                            .enumerate()
                            .map(|(g, e)| (g, k.from_int(RingSpec::Integers.to_int(e).as_ref().expect("integer chain"))))
                            .filter(|(_, e)| !k.is_zero(e));
                        GroupRingElement::from_terms(k, n, terms)
                    })
                    .collect::<Result<_>>()?;
                images.push(img);
            }
            Ok(Relative { spec: DenseRingSpec::group_ring(k, group.clone()), images, rank: new2 })
        }
    }
}

/// `sum_i lift_i * x_i` on blown integer coordinates.
fn combine(lifts: &[GroupRingElement], kernel: &MatrixR, group: &FiniteGroup) -> Vec<Elem> {
    let z = RingSpec::Integers;
    let mut out = vec![z.zero(); kernel.rows()];
    for (i, l) in lifts.iter().enumerate() {
        let x = kernel.column(i);
        for (h, c) in l.terms() {
            for (acc, t) in out.iter_mut().zip(translate(&x, h, group)) {
                *acc = z.add(acc, &z.mul(c, &t));
            }
        }
    }
    out
}

fn prefix_inclusion(ring: &RingSpec, rows: usize, cols: usize) -> MatrixR {
    MatrixR::from_fn(ring, rows, cols, |i, j| if i == j { ring.one() } else { ring.zero() })
}

/// Runs the construction for `X`, `alpha : pi_1(X) -> G` and normal
/// generators `kernel` of `ker alpha`.
///
/// Rejects (without error) when the homological hypotheses or the coefficient
/// gate fail. On acceptance every claimed isomorphism has been recomputed;
/// a failing check is an [`Error::Certificate`].
pub fn plus_construction(
    x: &SpaceModel,
    alpha: &GroupHom,
    kernel: &[Word],
    g: &GroupModel,
    coeffs: &Coefficients,
    max_cosets: usize,
) -> Result<PlusOutcome> {
    let hypotheses = check_hypotheses(x, alpha, g, coeffs, max_cosets)?;
    if !hypotheses.passes() {
        return Ok(PlusOutcome::Rejected(Box::new(hypotheses)));
    }
    let group = g.require_finite()?.clone();
    let n = group.order();
    let mut w = build_w(x, alpha, kernel, g, max_cosets)?;
    let wt =
        EquivariantChainComplex::from_presentation(group.clone(), w.space.base().num_gens(), &w.space.cells2(), &w.elements)?;

    let kernel_basis = smith_normal_form(&wt.boundary(2).blowup(&group)).kernel_basis();
    let rel = relative_images(&w, &kernel_basis, &group, coeffs)?;
    let (extraction, columns) = if rel.rank == 0 {
        (None, Vec::new())
    } else {
        let a = standard_coefficients(&rel.spec, &rel.images, rel.rank)?;
        let ext = extract_basis(&rel.spec, &rel.images, &a, rel.rank)?;
        let cols = ext.lifts.iter().map(|l| from_blown(&combine(l, &kernel_basis, &group), n)).collect();
        (Some(ext), cols)
    };
    let names = g.presentation().names();
    w.ledger.three_cells = columns
        .iter()
        .map(|c: &Vec<GroupRingElement>| {
            let parts: Vec<String> = c.iter().map(|e| format_group_ring(e, &group, names)).collect();
            format!("({})", parts.join(", "))
        })
        .collect();
    let y = wt.attach(columns)?;

    let xt = equivariant_chains(x, alpha, &group)?;
    let cx = coeffs.chains(&xt)?;
    let cy = coeffs.chains(&y)?;
    let ring = cx.ring().clone();
    let comps = (0..=2).map(|q| prefix_inclusion(&ring, cy.rank(q), cx.rank(q))).collect();
    let incl = ChainMapR::new(cx.clone(), cy.clone(), comps).map_err(|e| Error::Defect(format!("inclusion of X: {e}")))?;

    let homology_x: Vec<ModulePresentation> = (0..=3).map(|q| cx.homology(q)).collect();
    let homology_y: Vec<ModulePresentation> = (0..=3).map(|q| cy.homology(q)).collect();
    let mut certificates = Vec::new();
    let (_, flags) = induced_homology_map(&incl, 2)?;
    certificates.push(Certificate {
        name: "inclusion".into(),
        degree: 2,
        source: homology_x[2].to_string(),
        target: homology_y[2].to_string(),
        passed: flags.iso() && module_iso_test(&homology_x[2], &homology_y[2])?,
    });
    certificates.push(Certificate {
        name: "top-vanishing".into(),
        degree: 3,
        source: homology_x[3].to_string(),
        target: homology_y[3].to_string(),
        passed: homology_y[3].is_zero(),
    });
    let resolution = coeffs.chains(g.resolution()?)?;
    for (q, hy) in homology_y.iter().enumerate().take(2) {
        let hg = resolution.homology(q);
        certificates.push(Certificate {
            name: "group".into(),
            degree: q,
            source: hy.to_string(),
            target: hg.to_string(),
            passed: module_iso_test(hy, &hg)?,
        });
    }
    if let Some(c) = certificates.iter().find(|c| !c.passed) {
        return Err(Error::Certificate { degree: c.degree, msg: format!("{} check: {} vs {}", c.name, c.source, c.target) });
    }

    let [_, x1, x2] = x.cell_counts();
    let [l1, l2, l3] = w.ledger.counts();
    let cell_counts = [1, y.cells()[1], y.cells()[2], y.cells()[3]];
    let finite = cell_counts == [1, x1 + l1, x2 + l2, l3];
    Ok(PlusOutcome::Accepted(Box::new(PlusResult {
        tier: hypotheses.tier,
        coefficients: coeffs.clone(),
        hypotheses,
        w: w.space,
        y,
        ledger: w.ledger,
        extraction,
        homology_x,
        homology_y,
        certificates,
        cell_counts,
        finite,
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Presentation;
    use crate::plus::Provenance;

    fn a5() -> Presentation {
        Presentation::new(
            vec!["a".into(), "b".into()],
            vec![Word::from_powers(&[(0, 2)]), Word::from_powers(&[(1, 3)]), Word::from_powers(&[(0, 1), (1, 1)]).pow(5)],
        )
        .unwrap()
    }

    #[test]
    fn duplicated_relator_needs_one_three_cell() {
        let p = Presentation::new(vec!["a".into()], vec![Word::from_powers(&[(0, 5)]); 2]).unwrap();
        let g = GroupModel::finite(&p, 100).unwrap();
        let alpha = GroupHom::new(Presentation::trivial(), p, vec![]).unwrap();
        let z = Coefficients::Trivial(RingSpec::Integers);
        let out = plus_construction(&SpaceModel::point(), &alpha, &[], &g, &z, 100).unwrap();
        let r = out.accepted().unwrap();
        assert_eq!(r.cell_counts, [1, 1, 2, 1]);
        assert_eq!(r.ledger.one_cells, ["a"]);
        assert!(r.ledger.two_cells.iter().all(|c| c.provenance == Provenance::NewRelation));
        assert!(r.homology_y[2].is_zero() && r.homology_y[3].is_zero());
        assert!(r.finite && r.all_certified());
    }

    #[test]
    fn alternating_five_to_trivial() {
        let x = SpaceModel::new(a5(), vec![], false).unwrap();
        let alpha = GroupHom::to_trivial(x.base());
        let g = GroupModel::finite(&Presentation::trivial(), 10).unwrap();
        let z = Coefficients::Trivial(RingSpec::Integers);
        let out = plus_construction(&x, &alpha, &[Word::gen(0), Word::gen(1)], &g, &z, 1000).unwrap();
        let r = out.accepted().unwrap();
        assert_eq!(r.ledger.kill_kernel_cells(), 2);
        assert!(r.ledger.one_cells.is_empty());
        let h: Vec<String> = r.homology_y.iter().map(ToString::to_string).collect();
        assert_eq!(h, ["Z", "0", "Z", "0"]);
        assert_eq!(r.cell_counts, [1, 2, 5, 2]);
    }

    #[test]
    fn insufficient_kernel_generators() {
        let x = SpaceModel::new(a5(), vec![], false).unwrap();
        let alpha = GroupHom::to_trivial(x.base());
        let g = GroupModel::finite(&Presentation::trivial(), 10).unwrap();
        let z = Coefficients::Trivial(RingSpec::Integers);
        let err = plus_construction(&x, &alpha, &[], &g, &z, 1000).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(_)), "{err}");
    }
}
