#![no_main]
use libfuzzer_sys::fuzz_target;
use plus_core::parse::parse_hom;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(h) = parse_hom(s, None) {
            let again = parse_hom(&h.to_string(), None).expect("printed hom parses");
            assert_eq!(h, again);
        }
    }
});
