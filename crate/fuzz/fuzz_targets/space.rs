#![no_main]
use libfuzzer_sys::fuzz_target;
use plus_core::parse::parse_space;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(x) = parse_space(s) {
            let again = parse_space(&x.to_string()).expect("printed space parses");
            assert_eq!(x, again);
        }
    }
});
