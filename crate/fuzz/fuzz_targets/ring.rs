#![no_main]
use libfuzzer_sys::fuzz_target;
use plus_core::parse::parse_ring;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(r) = parse_ring(s) {
            assert_eq!(parse_ring(&r.to_string()).unwrap(), r);
        }
    }
});
