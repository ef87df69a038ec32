#![no_main]

use edgering::graph::{encode_graph6, parse_graph6};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_graph6(text) {
        let again = parse_graph6(&encode_graph6(&g)).expect("encoded record parses");
        assert_eq!(g, again);
    }
});
