#![no_main]

use libfuzzer_sys::fuzz_target;
use susa_core::expr::{eval_sex_expression, parse_expression};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 4096 {
        return;
    }
    let direct = eval_sex_expression(text);
    if let Ok(tree) = parse_expression(text) {
        assert_eq!(tree.eval().ok(), direct.ok());
    }
});
