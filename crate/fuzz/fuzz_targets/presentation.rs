#![no_main]
use libfuzzer_sys::fuzz_target;
use plus_core::parse::parse_presentation;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(p) = parse_presentation(s) {
            let again = parse_presentation(&p.to_string()).expect("printed presentation parses");
            assert_eq!(p, again);
        }
    }
});
