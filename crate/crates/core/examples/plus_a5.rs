//! Kills the fundamental group of the presentation complex of the order-60
//! group `<a, b | a^2, b^3, (ab)^5>` and prints the cell ledger.

use plus_core::groups::{GroupHom, Presentation, Word};
use plus_core::homology::{Coefficients, GroupModel, SpaceModel};
use plus_core::parse::parse_presentation;
use plus_core::plus::plus_construction;
use plus_core::rings::RingSpec;

fn main() -> plus_core::Result<()> {
    let p = parse_presentation("group { gens: a b; rels: a^2 b^3 (a*b)^5 }")?;
    let x = SpaceModel::new(p.clone(), Vec::new(), false)?;
    let g = GroupModel::finite(&Presentation::trivial(), 100)?;
    let alpha = GroupHom::new(p, Presentation::trivial(), vec![Word::empty(), Word::empty()])?;
    let kernel = [Word::gen(0), Word::gen(1)];
    let out = plus_construction(&x, &alpha, &kernel, &g, &Coefficients::Trivial(RingSpec::Integers), 10_000)?;
    let Some(y) = out.accepted() else {
        println!("rejected: {:?}", out.hypotheses().gate);
        return Ok(());
    };
    println!("cells of Y: {:?}", y.cell_counts);
    for (q, h) in y.homology_y.iter().enumerate() {
        println!("H_{q}(Y) = {h}");
    }
    for c in &y.ledger.three_cells {
        println!("3-cell {c}");
    }
    Ok(())
}
