#![no_main]

use libfuzzer_sys::fuzz_target;
use mldsurf::{fmt_q, parse_q};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(x) = parse_q(text) {
        assert_eq!(parse_q(&fmt_q(&x)).expect("printed value parses"), x);
    }
});
