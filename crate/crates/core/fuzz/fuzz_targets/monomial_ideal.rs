#![no_main]

use edgering::binom::max_variable_index;
use edgering::MonomialIdeal;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let n = max_variable_index(text).min(64);
    if let Ok(ideal) = MonomialIdeal::parse(text, n) {
        let lines: Vec<String> = ideal.gens().iter().map(ToString::to_string).collect();
        let again = MonomialIdeal::parse(&lines.join("\n"), n).expect("printed generators parse");
        assert_eq!(ideal, again);
    }
});
