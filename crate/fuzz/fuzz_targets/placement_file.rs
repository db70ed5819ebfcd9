#![no_main]

use libfuzzer_sys::fuzz_target;
use susa_core::dissection::{goal_region, grid_classify, parse_placement_file, Thresholds};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(file) = parse_placement_file(text) else { return };
    if file.placements.len() > 64 {
        return;
    }
    let (Ok(region), Ok(pieces)) = (goal_region(file.layout, file.a), file.pieces()) else { return };
    let _ = grid_classify(&region, &file.placements, &pieces, 12, Thresholds::default());
});
