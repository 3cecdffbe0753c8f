//! End-to-end acceptance checks. Prints one PASS/FAIL line per check and
//! exits nonzero if any check fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{a5_presentation, abelian, bar_homology, fixtures, Abelian};
use num_bigint::BigInt;
use plus_core::gdense::{gaussian_refuter, matrix_criterion, CriterionVerdict, DenseRingSpec};
use plus_core::groups::{todd_coxeter, FiniteGroup, GroupHom, Word};
use plus_core::homology::{five_term, hopf_check, Coefficients, GroupModel, SpaceModel};
use plus_core::linalg::{smith_normal_form, MatrixR};
use plus_core::parse::{parse_matrix, parse_presentation};
use plus_core::plus::{moore_space, partial_completion, plus_construction, relatively_perfect, Gate, PlusOutcome, PlusResult};
use plus_core::rings::{Elem, RingSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MAX: usize = 10_000;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn random_elem(ring: &RingSpec, rng: &mut ChaCha8Rng) -> Elem {
    let a = rng.gen_range(-50i64..=50);
    match ring {
        RingSpec::Gaussian => Elem::Gauss(BigInt::from(a), BigInt::from(rng.gen_range(-50i64..=50))),
        RingSpec::Rationals => ring.parse_elem(&format!("{a}/{}", rng.gen_range(1..=50))).unwrap(),
        _ => ring.from_i64(a),
    }
}

fn smith_suite() -> Check {
    let rings = [RingSpec::Integers, RingSpec::mod_p(5).unwrap(), RingSpec::Rationals, RingSpec::Gaussian];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut slowest = Duration::ZERO;
    for ring in &rings {
        for t in 0..500 {
            let (m, n) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
            let a = MatrixR::from_fn(ring, m, n, |_, _| random_elem(ring, &mut rng));
            let start = Instant::now();
            let s = smith_normal_form(&a);
            let uav = ok(s.u.mul(&a).and_then(|x| x.mul(&s.v)), "product")?;
            ensure!(uav == s.d, "U A V != D over {ring} (matrix {t})");
            ensure!(ok(s.u.mul(&s.u_inv), "U")? == MatrixR::identity(ring, m), "U U^-1 != I over {ring}");
            ensure!(ok(s.v.mul(&s.v_inv), "V")? == MatrixR::identity(ring, n), "V V^-1 != I over {ring}");
            ensure!(ok(s.u.det(), "det U")?.is_unit().0, "det U is not a unit over {ring}");
            ensure!(ok(s.v.det(), "det V")?.is_unit().0, "det V is not a unit over {ring}");
            for i in 0..m {
                for j in 0..n {
                    let zero = ring.is_zero(s.d.get(i, j));
                    ensure!(zero == (i != j || i >= s.rank()), "D is not in normal shape over {ring}");
                }
            }
            let diag = s.diagonal();
            ensure!(diag.windows(2).all(|w| ring.divides(&w[0], &w[1])), "divisibility chain fails over {ring}");
            let took = start.elapsed();
            slowest = slowest.max(took);
            ensure!(took < Duration::from_secs(1), "matrix {t} over {ring} took {took:?}");
        }
    }
    Ok(format!("2000 matrices, slowest {slowest:?}"))
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let mut compared = 0;
    for f in fixtures() {
        let g = ok(GroupModel::finite(&f.presentation, MAX), &f.name)?;
        for p in [None, Some(2), Some(3), Some(5)] {
            let ring = p.map_or(RingSpec::Integers, |p| RingSpec::mod_p(p).unwrap());
            let expected = bar_homology(&f.table, p);
            for (q, want) in expected.iter().enumerate() {
                let got = abelian(&ok(g.homology(&ring, q), &f.name)?);
                ensure!(got == *want, "{} H_{q} over {ring}: {got:?} vs oracle {want:?}", f.name);
                compared += 1;
            }
        }
        let h2 = abelian(&ok(g.homology(&RingSpec::Integers, 2), &f.name)?);
        if f.name == "(Z/2)^2" {
            ensure!(h2 == Abelian { free_rank: 0, factors: vec![2] }, "H_2((Z/2)^2) = {h2:?}");
        }
        if f.name.starts_with("Z/") && !f.name.contains(" x ") {
            ensure!(h2 == Abelian { free_rank: 0, factors: vec![] }, "H_2({}) = {h2:?}", f.name);
        }
    }
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(120), "took {took:?}");
    Ok(format!("{compared} modules, {took:?}"))
}

/// Accepted runs collected along the way, for the finiteness check.
#[derive(Default)]
struct Runs(Vec<(String, PlusResult)>);

impl Runs {
    fn keep(&mut self, name: &str, out: &PlusOutcome) {
        if let Some(r) = out.accepted() {
            self.0.push((name.to_string(), r.clone()));
        }
    }
}

/// `H_q(Y; R)` straight from the cellular chains of `Y`.
fn raw_homology(r: &PlusResult, ring: &RingSpec, q: usize) -> Result<plus_core::linalg::ModulePresentation, String> {
    let c = ok(Coefficients::Trivial(ring.clone()).chains(&r.y), "chains of Y")?;
    Ok(c.homology(q))
}

fn moore_iff(runs: &mut Runs) -> Check {
    let z = RingSpec::Integers;
    let mut accepted = 0;
    let total = fixtures().len();
    for f in fixtures() {
        let g = ok(GroupModel::finite(&f.presentation, MAX), &f.name)?;
        let h2 = &bar_homology(&f.table, None)[2];
        let vanishes = h2.free_rank == 0 && h2.factors.is_empty();
        let out = ok(moore_space(&g, &z, MAX), &f.name)?;
        ensure!(out.accepted().is_some() == vanishes, "{}: accepted = {}, H_2 = {h2:?}", f.name, !vanishes);
        if let Some(r) = out.accepted() {
            accepted += 1;
            ensure!(r.all_certified(), "{}: a certificate failed", f.name);
            for q in [2, 3] {
                let h = raw_homology(r, &z, q)?;
                ensure!(h.is_zero(), "{}: H_{q}(Y) = {h}", f.name);
            }
        }
        runs.keep(&f.name, &out);
    }
    let dup = ok(parse_presentation("group { gens: a; rels: a^5 a^5 }"), "parse")?;
    let g = ok(GroupModel::finite(&dup, MAX), "duplicated relator")?;
    let out = ok(moore_space(&g, &z, MAX), "duplicated relator")?;
    let r = out.accepted().ok_or("duplicated relator rejected")?;
    ensure!(r.three_cells() == 1, "duplicated relator: {} 3-cells", r.three_cells());
    ensure!(r.all_certified(), "duplicated relator: a certificate failed");
    ensure!(raw_homology(r, &z, 2)?.is_zero() && raw_homology(r, &z, 3)?.is_zero(), "duplicated relator: H_2 or H_3 nonzero");
    runs.keep("duplicated relator", &out);
    Ok(format!("{accepted} of {total} groups accepted; duplicated relator uses one 3-cell"))
}

fn a5_plus(runs: &mut Runs) -> Check {
    let start = Instant::now();
    let z = RingSpec::Integers;
    let p = a5_presentation();
    let order = ok(todd_coxeter(&p, MAX), "enumeration")?.order();
    ensure!(order == 60, "order {order}");
    let x = ok(SpaceModel::new(p.clone(), Vec::new(), false), "space")?;
    let g = ok(GroupModel::finite(&plus_core::groups::Presentation::trivial(), MAX), "trivial group")?;
    let alpha = ok(GroupHom::new(p.clone(), g.presentation().clone(), vec![Word::empty(), Word::empty()]), "hom")?;
    let kernel = [Word::gen(0), Word::gen(1)];
    let out = ok(plus_construction(&x, &alpha, &kernel, &g, &Coefficients::Trivial(z.clone()), MAX), "plus")?;
    ensure!(out.hypotheses().passes(), "hypotheses fail");
    let r = out.accepted().ok_or("rejected")?;
    ensure!(r.all_certified(), "a certificate failed");
    let hx = &r.homology_x;
    ensure!(hx[2] == plus_core::linalg::ModulePresentation::free(&z, 1), "H_2(X) = {}", hx[2]);
    let h: Vec<_> = (1..=3).map(|q| raw_homology(r, &z, q)).collect::<Result<_, _>>()?;
    ensure!(h[0].is_zero(), "H_1(Y) = {}", h[0]);
    ensure!(h[1] == hx[2], "H_2(Y) = {} but H_2(X) = {}", h[1], hx[2]);
    ensure!(h[2].is_zero(), "H_3(Y) = {}", h[2]);
    let c = r.cell_counts;
    let chi = c[0] as i64 - c[1] as i64 + c[2] as i64 - c[3] as i64;
    ensure!(chi == 2, "Euler characteristic {chi}");
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(60), "took {took:?}");
    runs.keep("A_5", &out);
    Ok(format!("cells {c:?}, chi = 2, {took:?}"))
}

fn five_term_suite() -> Check {
    let z_pi = ok(parse_presentation("group { gens: a; rels: }"), "parse")?;
    let pi = GroupModel::aspherical(&z_pi);
    let (perfect, report) = ok(relatively_perfect(&pi, &[Word::from_powers(&[(0, 2)])], MAX), "(Z, 2Z)")?;
    ensure!(report.is_exact(), "(Z, 2Z): not exact at {:?}", report.joints);
    ensure!(report.middle().to_string() == "Z", "(Z, 2Z): middle term {}", report.middle());
    ensure!(!perfect, "(Z, 2Z) reported relatively perfect");

    let all = fixtures();
    let a4 = all.iter().find(|f| f.name == "A_4").unwrap();
    let pi = ok(GroupModel::finite(&a4.presentation, MAX), "A_4")?;
    let (perfect, report) = ok(relatively_perfect(&pi, &[Word::gen(0)], MAX), "(A_4, V_4)")?;
    ensure!(report.is_exact(), "(A_4, V_4): not exact at {:?}", report.joints);
    ensure!(report.middle().is_zero(), "(A_4, V_4): middle term {}", report.middle());
    ensure!(perfect, "(A_4, V_4) reported not relatively perfect");

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut seen = Vec::new();
    while seen.len() < 10 {
        let f = &all[rng.gen_range(0..all.len())];
        let gens = f.presentation.num_gens();
        let len = rng.gen_range(1..=3);
        let w = Word::from_powers(&(0..len).map(|_| (rng.gen_range(0..gens), rng.gen_range(-2i64..=2))).collect::<Vec<_>>());
        if f.table.eval(&w) == 0 {
            continue;
        }
        let pi = ok(GroupModel::finite(&f.presentation, MAX), &f.name)?;
        let report = ok(five_term(&pi, std::slice::from_ref(&w), MAX), &f.name)?;
        let label = format!("({}, <<{}>>)", f.name, w.display(f.presentation.names()));
        ensure!(report.is_exact(), "{label}: not exact at {:?}", report.joints);
        let expected = f.table.relative_abelianization_order(&[f.table.eval(&w)]);
        let middle = report.middle();
        ensure!(middle.free_rank() == 0, "{label}: infinite middle term {middle}");
        let got = middle.torsion_order().map(|n| n.to_string());
        ensure!(got == Some(expected.to_string()), "{label}: middle term {middle}, expected order {expected}");
        seen.push(label);
    }
    Ok(format!("2 named and 10 random fixtures, e.g. {}", seen[0]))
}

fn gaussian_refutation() -> Check {
    let start = Instant::now();
    let g = RingSpec::Gaussian;
    let a = ok(parse_matrix("Z[i]: [[3, 2-1i], [2+1i, 2]]"), "parse")?;
    let det = ok(a.det(), "det")?;
    ensure!(g.is_one(det.elem()), "det = {det}");
    let spec = DenseRingSpec::constant(&g, Arc::new(FiniteGroup::trivial()));
    let v = ok(matrix_criterion(&a, 1, &spec, 3), "criterion")?;
    let CriterionVerdict::Refuted { cases } = &v else {
        return Err(format!("verdict {v:?}"));
    };
    let units: Vec<&str> = cases.iter().map(|c| c.unit.as_str()).collect();
    ensure!(cases.len() == 4 && cases.iter().all(|c| c.solution.is_none()), "cases {cases:?}");
    ensure!(gaussian_refuter(&a).map(|r| r == v).unwrap_or(false), "refuter disagrees");
    for src in ["Z/5: [[2, 1], [1, 1]]", "Q: [[2, 1], [1, 1]]", "Q: [[1/2, 0], [0, 2]]"] {
        let m = ok(parse_matrix(src), src)?;
        let spec = DenseRingSpec::constant(m.ring(), Arc::new(FiniteGroup::trivial()));
        let v = ok(matrix_criterion(&m, 1, &spec, 3), src)?;
        ensure!(v.is_witness(), "{src}: {v:?}");
    }
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(1), "took {took:?}");
    Ok(format!("refuted for units {}, witnesses over Z/5 and Q, {took:?}", units.join(" ")))
}

fn hopf_suite(runs: &Runs) -> Check {
    let mut spaces: Vec<(String, SpaceModel)> = Vec::new();
    let sources = fixtures().into_iter().map(|f| (f.name, f.presentation)).chain([
        ("A_5".to_string(), a5_presentation()),
        ("duplicated relator".to_string(), parse_presentation("group { gens: a; rels: a^5 a^5 }").unwrap()),
    ]);
    for (name, p) in sources {
        spaces.push((name.clone(), ok(SpaceModel::new(p.clone(), Vec::new(), false), &name)?));
        spaces.push((format!("{name} with a sphere"), ok(SpaceModel::new(p, vec![Word::empty()], false), &name)?));
    }
    for (name, r) in &runs.0 {
        spaces.push((format!("W for {name}"), r.w.clone()));
    }
    let rings = [RingSpec::Integers, RingSpec::mod_p(2).unwrap(), RingSpec::mod_p(3).unwrap(), RingSpec::mod_p(5).unwrap()];
    let mut checked = 0;
    for (name, x) in &spaces {
        for ring in &rings {
            let c = ok(hopf_check(x, &Coefficients::Trivial(ring.clone()), MAX), name)?;
            ensure!(c.is_exact(), "{name} over {ring}: middle {} right {}", c.exact_middle, c.surjective_right);
            checked += 1;
        }
    }
    Ok(format!("{checked} sequences on {} spaces", spaces.len()))
}

fn partial_completion_suite(runs: &mut Runs) -> Check {
    let f2 = RingSpec::mod_p(2).unwrap();
    let c3 = ok(parse_presentation("group { gens: a; rels: a^3 }"), "parse")?;
    let pi = ok(GroupModel::finite(&c3, MAX), "Z/3")?;
    let out = ok(partial_completion(&pi, &[Word::gen(0)], &f2, MAX), "Z/3")?;
    ensure!(out.hypotheses().gate == Gate::RelH1Zero, "Z/3 gate {:?}", out.hypotheses().gate);
    let r = out.accepted().ok_or("Z/3 rejected")?;
    ensure!(r.all_certified(), "Z/3: a certificate failed");
    for q in 2..=3 {
        ensure!(r.homology_x[q] == r.homology_y[q], "Z/3: H_{q}(X) = {} but H_{q}(Y) = {}", r.homology_x[q], r.homology_y[q]);
    }
    runs.keep("partial completion of Z/3", &out);

    let q = RingSpec::Rationals;
    let a5 = ok(GroupModel::finite(&a5_presentation(), MAX), "A_5")?;
    let out = ok(partial_completion(&a5, &[Word::gen(0), Word::gen(1)], &q, MAX), "A_5")?;
    let h = out.hypotheses();
    ensure!(h.h1_modules[0].is_zero(), "H_1(A_5; Q[1]) = {}", h.h1_modules[0]);
    ensure!(h.gate == Gate::RelH1Zero, "A_5 gate {:?}", h.gate);
    ensure!(h.passes(), "A_5 over Q: hypotheses fail");
    runs.keep("partial completion of A_5", &out);
    Ok("Z/3 at Z/2 and A_5 at Q".into())
}

fn finiteness(runs: &Runs) -> Check {
    ensure!(!runs.0.is_empty(), "no accepted runs");
    for (name, r) in &runs.0 {
        ensure!(r.finite, "{name}: ledger not finite");
        ensure!(r.y.cells() == r.cell_counts, "{name}: Y has cells {:?}, report says {:?}", r.y.cells(), r.cell_counts);
        let ledger = r.ledger.counts();
        ensure!(r.cell_counts[3] == ledger[2], "{name}: 3-cells not all in the ledger");
    }
    Ok(format!("{} accepted runs", runs.0.len()))
}

fn run(name: &str, check: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
        let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    let took = start.elapsed();
    match result {
        Ok(detail) => {
            println!("PASS  {name}: {detail} [{took:.2?}]");
            true
        }
        Err(e) => {
            println!("FAIL  {name}: {e} [{took:.2?}]");
            false
        }
    }
}

fn main() -> ExitCode {
    let mut runs = Runs::default();
    let results = [
        run("smith normal form properties", smith_suite),
        run("group homology matches bar-resolution oracle", oracle_equivalence),
        run("moore space exists iff H_2(G) = 0", || moore_iff(&mut runs)),
        run("plus construction on the order-60 presentation", || a5_plus(&mut runs)),
        run("five-term sequence exactness", five_term_suite),
        run("gaussian refutation and witnesses", gaussian_refutation),
        run("partial k-completion", || partial_completion_suite(&mut runs)),
        run("hopf sequence exactness", || hopf_suite(&runs)),
        run("accepted runs are finite", || finiteness(&runs)),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
