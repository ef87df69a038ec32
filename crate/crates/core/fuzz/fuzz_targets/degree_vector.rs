#![no_main]

use edgering::DegreeVector;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = DegreeVector::parse(text) {
        assert_eq!(DegreeVector::parse(&s.to_string()).expect("printed vector parses"), s);
    }
});
