#![no_main]

use libfuzzer_sys::fuzz_target;
use susa_core::{parse_sexagesimal, render_sexagesimal, RenderMode};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 4096 {
        return;
    }
    let Ok(value) = parse_sexagesimal(text) else { return };
    // every literal has a regular denominator, so it renders back exactly
    let digits = render_sexagesimal(&value, text.len(), RenderMode::RequireExact).expect("literal renders exactly");
    assert_eq!(parse_sexagesimal(&digits.to_string()).unwrap(), value);
});
