//! Replays the fuzz corpus seeds through the same round-trip checks as the
//! fuzz targets, and feeds the parsers arbitrary text.

use std::fs;
use std::path::PathBuf;

use plus_core::groups::{todd_coxeter, Presentation};
use plus_core::linalg::smith_normal_form;
use plus_core::parse::{parse_hom, parse_matrix, parse_module, parse_presentation, parse_ring, parse_space, parse_words};
use plus_core::rings::RingSpec;
use proptest::prelude::*;

type ParseCheck = fn(&str) -> bool;

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let path = e.unwrap().path();
            (path.display().to_string(), fs::read_to_string(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn check_all(s: &str) {
    if let Ok(p) = parse_presentation(s) {
        assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
        if let Ok(t) = todd_coxeter(&p, 2000) {
            assert!(t.is_consistent_with(&p));
        }
    }
    let free = Presentation::free(["a", "b", "c"]).unwrap();
    if let Ok(words) = parse_words(s, &free) {
        for w in words {
            assert!(w.concat(&w.inverse()).is_empty());
        }
    }
    if let Ok(h) = parse_hom(s, None) {
        assert_eq!(parse_hom(&h.to_string(), None).unwrap(), h);
    }
    if let Ok(x) = parse_space(s) {
        assert_eq!(parse_space(&x.to_string()).unwrap(), x);
    }
    if let Ok(r) = parse_ring(s) {
        assert_eq!(parse_ring(&r.to_string()).unwrap(), r);
    }
    if let Ok(a) = parse_matrix(s) {
        assert_eq!(parse_matrix(&a.to_string()).unwrap(), a);
        if a.rows() <= 6 && a.cols() <= 6 {
            let f = smith_normal_form(&a);
            assert_eq!(f.u.mul(&a).unwrap().mul(&f.v).unwrap(), f.d);
        }
    }
    let z = RingSpec::Integers;
    if let Ok(m) = parse_module(&z, s) {
        assert_eq!(parse_module(&z, &m.to_string()).unwrap(), m);
    }
}

#[test]
fn corpus_seeds_parse_and_round_trip() {
    let expect_ok: [(&str, ParseCheck); 7] = [
        ("presentation", |s| parse_presentation(s).is_ok()),
        ("word", |s| parse_words(s, &Presentation::free(["a", "b", "c"]).unwrap()).is_ok()),
        ("hom", |s| parse_hom(s, None).is_ok()),
        ("space", |s| parse_space(s).is_ok()),
        ("ring", |s| parse_ring(s).is_ok()),
        ("matrix", |s| parse_matrix(s).is_ok()),
        ("module", |s| parse_module(&RingSpec::Integers, s).is_ok()),
    ];
    for (target, parses) in expect_ok {
        for (path, src) in seeds(target) {
            assert!(parses(&src), "{path} does not parse");
            check_all(&src);
        }
    }
    for (_, src) in seeds("cosets") {
        check_all(&src);
    }
}

proptest! {
    #[test]
    fn arbitrary_text_never_panics(s in "\\PC{0,60}") {
        check_all(&s);
    }

    #[test]
    fn grammar_shaped_text_never_panics(s in "(group|hom|space|gens|rels|from|to|kernel|cells2|aspherical|Z|Q|\\[|\\]|\\{|\\}|:|;|,|\\^|-|\\*|\\(|\\)|a|b|1|2|i|/| ){0,40}") {
        check_all(&s);
    }
}
