use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, GroupHom, Presentation, Word};
use crate::homology::{GroupModel, SpaceModel};
use crate::rings::GroupRingElement;

/// Why a 2-cell was added.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// One of the supplied normal generators of `ker alpha`.
    KillKernel,
    /// A relation of `G` or an identification of an old generator.
    NewRelation,
    /// A trivially attached sphere.
    SphereWedge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerCell {
    pub word: String,
    pub provenance: Provenance,
}

/// Cells added to `X`, by dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CellLedger {
    pub one_cells: Vec<String>,
    pub two_cells: Vec<LedgerCell>,
    /// Boundaries of the 3-cells as `Z[G]`-columns.
    pub three_cells: Vec<String>,
}

impl CellLedger {
    /// Added cells in degrees 1, 2, 3.
    pub fn counts(&self) -> [usize; 3] {
        [self.one_cells.len(), self.two_cells.len(), self.three_cells.len()]
    }

    pub fn kill_kernel_cells(&self) -> usize {
        self.two_cells.iter().filter(|c| c.provenance == Provenance::KillKernel).count()
    }
}

/// `W`: `X` with 1- and 2-cells added so that `pi_1(W) = G`.
#[derive(Clone, Debug)]
pub struct WModel {
    pub space: SpaceModel,
    pub ledger: CellLedger,
    /// Element of `G` for each generator of `W`.
    pub elements: Vec<usize>,
    /// Cells of `X` in degrees 1 and 2; they come first in `W`.
    pub x_cells: [usize; 2],
}

impl WModel {
    pub fn new_cells(&self) -> [usize; 2] {
        let [_, g, c] = self.space.cell_counts();
        [g - self.x_cells[0], c - self.x_cells[1]]
    }
}

/// A relator and its inverse define the same cell up to orientation.
fn relation_key(w: &Word) -> Word {
    let (a, b) = (w.cyclic_key(), w.inverse().cyclic_key());
    a.min(b)
}

fn subgroup_order(group: &FiniteGroup, elems: &[usize]) -> usize {
    let mut seen = vec![false; group.order()];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(g) = stack.pop() {
        for &e in elems {
            let h = group.mul(g, e);
            if !seen[h] {
                seen[h] = true;
                count += 1;
                stack.push(h);
            }
        }
    }
    count
}

/// Builds `W` from `X`, `alpha : pi_1(X) -> G`, and normal generators of
/// `ker alpha`.
///
/// If `alpha` is onto, `W` is `X` with one 2-cell per kernel generator.
/// Otherwise each generator `x` whose image is a single positive letter `y`
/// (not yet taken) is identified with `y`, the remaining generators of `G`
/// become new 1-cells, and 2-cells are added for the kernel generators, for
/// `x = alpha(x)` on the unidentified generators, and for the relators of
/// `G`; relations already present are not repeated.
///
/// The kernel generators are checked to map trivially and, by enumerating
/// `pi_1(X) / <<S>>`, to normally generate the whole kernel.
pub fn build_w(x: &SpaceModel, alpha: &GroupHom, kernel: &[Word], g: &GroupModel, max_cosets: usize) -> Result<WModel> {
    let group = g.require_finite()?;
    let base = x.base();
    if alpha.source().num_gens() != base.num_gens() || alpha.target().num_gens() != g.presentation().num_gens() {
        return Err(Error::InvalidHom("homomorphism does not match the space and the group".into()));
    }
    alpha.validate_with(group)?;
    let images: Vec<usize> = alpha.images().iter().map(|w| group.evaluate(w)).collect();
    for (i, w) in x.cells2().iter().enumerate() {
        if group.evaluate(&alpha.apply(w)) != 0 {
            return Err(Error::InvalidHom(format!("2-cell {i} of X does not map to the identity")));
        }
    }
    for (i, s) in kernel.iter().enumerate() {
        base.check_word(s)?;
        if group.evaluate(&alpha.apply(s)) != 0 {
            return Err(Error::Hypothesis(format!("kernel generator {i} does not map to the identity")));
        }
    }
    let image_order = subgroup_order(group, &images);
    let killed = x.fundamental_group().quotient(kernel)?;
    match FiniteGroup::enumerate(&killed, max_cosets) {
        Ok(q) if q.order() == image_order => {}
        Ok(q) => {
            return Err(Error::Hypothesis(format!(
                "the kernel generators leave a group of order {}, but the image of alpha has order {image_order}",
                q.order()
            )))
        }
        Err(o) => {
            return Err(Error::TierRejection(format!("{o} while checking that the kernel generators suffice")));
        }
    }

    let x_names = base.names().to_vec();
    let x_cells = x.cells2();
    let mut ledger = CellLedger::default();
    let mut cells = x_cells.clone();
    let kill = |cells: &mut Vec<Word>, ledger: &mut CellLedger, names: &[String]| {
        for s in kernel {
            ledger.two_cells.push(LedgerCell { word: s.display(names).to_string(), provenance: Provenance::KillKernel });
            cells.push(s.clone());
        }
    };

    if image_order == group.order() {
        kill(&mut cells, &mut ledger, &x_names);
        let p = Presentation::new(x_names.clone(), cells)?;
        let space = SpaceModel::new(p, Vec::new(), false)?;
        return Ok(WModel { space, ledger, elements: images, x_cells: [base.num_gens(), x_cells.len()] });
    }

    let g_names = g.presentation().names();
    let nx = base.num_gens();
    let mut claimed: Vec<Option<usize>> = vec![None; g_names.len()];
    for (i, w) in alpha.images().iter().enumerate() {
        if let [l] = w.letters() {
            if !l.inv && claimed[l.gen].is_none() {
                claimed[l.gen] = Some(i);
            }
        }
    }
    let mut names = x_names.clone();
    let mut iota = Vec::with_capacity(g_names.len());
    let mut elements = images.clone();
    for (j, c) in claimed.iter().enumerate() {
        match c {
            Some(i) => iota.push(Word::gen(*i)),
            None => {
                let mut name = g_names[j].clone();
                while names.contains(&name) {
                    name.push('\'');
                }
                iota.push(Word::gen(names.len()));
                ledger.one_cells.push(name.clone());
                names.push(name);
                elements.push(group.generator(j));
            }
        }
    }
    kill(&mut cells, &mut ledger, &names);

    let mut present: BTreeMap<Word, usize> = BTreeMap::new();
    for w in &cells {
        *present.entry(relation_key(w)).or_default() += 1;
    }
    let identified: HashSet<usize> = claimed.iter().flatten().copied().collect();
    for i in 0..nx {
        if identified.contains(&i) {
            continue;
        }
        let w = Word::gen(i).inverse().concat(&alpha.images()[i].substitute(&iota));
        let key = relation_key(&w);
        if w.is_empty() || present.contains_key(&key) {
            continue;
        }
        *present.entry(key).or_default() += 1;
        ledger.two_cells.push(LedgerCell { word: w.display(&names).to_string(), provenance: Provenance::NewRelation });
        cells.push(w);
    }
    for r in g.presentation().relators() {
        let w = r.substitute(&iota);
        let key = relation_key(&w);
        if let Some(n) = present.get_mut(&key).filter(|n| **n > 0) {
            *n -= 1;
            continue;
        }
        ledger.two_cells.push(LedgerCell { word: w.display(&names).to_string(), provenance: Provenance::NewRelation });
        cells.push(w);
    }
    for (i, w) in cells.iter().enumerate() {
        let e = w.letters().iter().fold(0, |acc, l| {
            let g = elements[l.gen];
            group.mul(acc, if l.inv { group.inverse(g) } else { g })
        });
        if e != 0 {
            return Err(Error::Defect(format!("2-cell {i} of W does not map to the identity")));
        }
    }
    let p = Presentation::new(names, cells)?;
    let space = SpaceModel::new(p, Vec::new(), false)?;
    Ok(WModel { space, ledger, elements, x_cells: [nx, x_cells.len()] })
}

/// `sum c * g`, with group elements written as words in the generators.
pub(crate) fn format_group_ring(e: &GroupRingElement, group: &FiniteGroup, names: &[String]) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let base = e.base();
    let mut out = String::new();
    for (k, (g, c)) in e.terms().enumerate() {
        let c = base.format(c);
        let (sign, mag) = match c.strip_prefix('-') {
            Some(m) => ("-", m.to_string()),
            None => ("+", c),
        };
        if k > 0 {
            let _ = write!(out, " {sign} ");
        } else if sign == "-" {
            out.push('-');
        }
        let w = group.rep(g).display(names).to_string();
        match (mag.as_str(), w.as_str()) {
            (m, "1") => out.push_str(m),
            ("1", w) => out.push_str(w),
            (m, w) => {
                let _ = write!(out, "{m}*{w}");
            }
        }
    }
    out
}
