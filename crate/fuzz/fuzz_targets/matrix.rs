#![no_main]
use libfuzzer_sys::fuzz_target;
use plus_core::linalg::smith_normal_form;
use plus_core::parse::parse_matrix;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(a) = parse_matrix(s) {
            assert_eq!(parse_matrix(&a.to_string()).unwrap(), a);
            if a.rows() <= 6 && a.cols() <= 6 {
                let f = smith_normal_form(&a);
                assert_eq!(f.u.mul(&a).unwrap().mul(&f.v).unwrap(), f.d);
            }
        }
    }
});
