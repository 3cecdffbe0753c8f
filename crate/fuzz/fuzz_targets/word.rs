#![no_main]
use libfuzzer_sys::fuzz_target;
use plus_core::groups::Presentation;
use plus_core::parse::parse_words;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let p = Presentation::free(["a", "b", "c"]).unwrap();
        if let Ok(words) = parse_words(s, &p) {
            for w in words {
                assert!(w.concat(&w.inverse()).is_empty());
            }
        }
    }
});
