#![no_main]

use edgering::binom::{max_variable_index, parse_binomial, MonomialOrder};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let n = max_variable_index(text).min(64);
    for order in [MonomialOrder::Lex, MonomialOrder::Grevlex] {
        if let Ok(b) = parse_binomial(text, n, &order) {
            let again = parse_binomial(&b.to_string(), n, &order).expect("printed binomial parses");
            assert_eq!(b, again);
        }
    }
});
