#![no_main]
use libfuzzer_sys::fuzz_target;
use plus_core::groups::todd_coxeter;
use plus_core::parse::parse_presentation;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(p) = parse_presentation(s) {
            if let Ok(t) = todd_coxeter(&p, 2000) {
                assert!(t.is_consistent_with(&p));
            }
        }
    }
});
