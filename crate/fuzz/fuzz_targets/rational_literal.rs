#![no_main]

use std::str::FromStr;

use libfuzzer_sys::fuzz_target;
use susa_core::Rational;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 4096 {
        return;
    }
    if let Ok(value) = Rational::from_str(text) {
        assert_eq!(Rational::from_str(&value.to_string()).ok(), Some(value));
    }
});
