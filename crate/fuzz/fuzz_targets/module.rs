#![no_main]
use libfuzzer_sys::fuzz_target;
use plus_core::parse::parse_module;
use plus_core::rings::RingSpec;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let z = RingSpec::Integers;
        if let Ok(m) = parse_module(&z, s) {
            assert_eq!(parse_module(&z, &m.to_string()).unwrap(), m);
        }
    }
});
