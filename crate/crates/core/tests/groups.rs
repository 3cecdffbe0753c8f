mod common;

use common::{a5_presentation, fixtures};
use plus_core::groups::{todd_coxeter, FiniteGroup, GroupHom, Letter, Presentation, Word};
use plus_core::parse::{parse_presentation, parse_word};
use proptest::prelude::*;

fn arb_word(gens: usize, len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..gens, any::<bool>()), 0..len)
        .prop_map(|ls| Word::from_letters(ls.into_iter().map(|(g, inv)| Letter::new(g, inv))))
}

proptest! {
    #[test]
    fn inverse_laws(u in arb_word(3, 12), v in arb_word(3, 12)) {
        prop_assert_eq!(u.inverse().inverse(), u.clone());
        prop_assert!(u.concat(&u.inverse()).is_empty());
        prop_assert_eq!(u.concat(&v).inverse(), v.inverse().concat(&u.inverse()));
        prop_assert_eq!(u.concat(&v).exponent_sum(1), u.exponent_sum(1) + v.exponent_sum(1));
    }

    #[test]
    fn words_are_freely_reduced(u in arb_word(2, 20), v in arb_word(2, 20)) {
        let w = u.concat(&v);
        for pair in w.letters().windows(2) {
            prop_assert_ne!(pair[0], pair[1].inverse());
        }
        prop_assert!(w.len() <= u.len() + v.len());
    }

    #[test]
    fn cyclic_key_is_a_conjugacy_invariant(w in arb_word(3, 12), c in arb_word(3, 6)) {
        let conj = c.concat(&w).concat(&c.inverse());
        prop_assert_eq!(conj.cyclic_key(), w.cyclic_key());
        prop_assert_eq!(w.inverse().cyclic_key(), w.cyclic_key());
        let r = w.cyclically_reduce();
        if let (Some(first), Some(last)) = (r.letters().first(), r.letters().last()) {
            prop_assert!(r.len() == 1 || *first != last.inverse());
        }
    }

    #[test]
    fn words_round_trip_through_text(w in arb_word(3, 15)) {
        let p = Presentation::free(["x", "y", "z"]).unwrap();
        let text = w.display(p.names()).to_string();
        prop_assert_eq!(parse_word(&text, &p).unwrap(), w);
    }

    #[test]
    fn evaluation_is_a_homomorphism(u in arb_word(2, 10), v in arb_word(2, 10)) {
        let g = FiniteGroup::enumerate(&a5_presentation(), 1000).unwrap();
        prop_assert_eq!(g.evaluate(&u.concat(&v)), g.mul(g.evaluate(&u), g.evaluate(&v)));
        prop_assert_eq!(g.evaluate(&u.inverse()), g.inverse(g.evaluate(&u)));
    }

    #[test]
    fn abelian_orders(n in 1i64..8, m in 1i64..8) {
        let p = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![Word::from_powers(&[(0, n)]), Word::from_powers(&[(1, m)]), Word::from_powers(&[(0, 1), (1, 1), (0, -1), (1, -1)])],
        ).unwrap();
        let t = todd_coxeter(&p, 1000).unwrap();
        prop_assert_eq!(t.order(), (n * m) as usize);
        prop_assert!(t.is_consistent_with(&p));
    }
}

#[test]
fn fixture_orders() {
    for f in fixtures() {
        let g = FiniteGroup::enumerate(&f.presentation, 1000).unwrap();
        assert_eq!(g.order(), f.table.order, "{}", f.name);
        for r in f.presentation.relators() {
            assert_eq!(g.evaluate(r), 0, "{}", f.name);
        }
    }
}

#[test]
fn known_orders() {
    let cases = [
        ("group { gens: a b; rels: a^2 b^3 (a*b)^5 }", 60),
        ("group { gens: a b; rels: a^2 b^3 (a*b)^4 }", 24),
        ("group { gens: r s; rels: r^7 s^2 (s*r)^2 }", 14),
        ("group { gens: a b; rels: a^4 a^2*b^-2 b*a*b^-1*a }", 8),
        ("group { gens: a b c; rels: a b c }", 1),
        ("group { gens: a b; rels: a^3 b^3 (a*b)^3 [a,b] }", 9),
    ];
    for (src, order) in cases {
        let p = parse_presentation(src).unwrap();
        assert_eq!(todd_coxeter(&p, 10_000).unwrap().order(), order, "{src}");
    }
}

#[test]
fn coset_limit() {
    let p = parse_presentation("group { gens: a b; rels: a^2 b^3 }").unwrap();
    assert!(todd_coxeter(&p, 500).is_err());
    let p = parse_presentation("group { gens: a b; rels: a^2 b^3 (a*b)^5 }").unwrap();
    assert!(todd_coxeter(&p, 10).is_err());
}

#[test]
fn homomorphisms_are_checked() {
    let a5 = a5_presentation();
    let g = FiniteGroup::enumerate(&a5, 1000).unwrap();
    let id = GroupHom::identity(&a5);
    assert!(id.validate_with(&g).is_ok());
    assert!(id.is_surjective_onto(&g));
    let c2 = parse_presentation("group { gens: t; rels: t^2 }").unwrap();
    // a -> t, b -> 1 is not a homomorphism: (ab)^5 -> t^5 = t
    let bad = GroupHom::new(a5.clone(), c2.clone(), vec![Word::gen(0), Word::empty()]).unwrap();
    let t = FiniteGroup::enumerate(&c2, 10).unwrap();
    assert!(bad.validate_with(&t).is_err());
}
