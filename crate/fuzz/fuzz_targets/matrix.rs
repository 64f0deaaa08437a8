#![no_main]

use libfuzzer_sys::fuzz_target;
use semimod::parse::parse_matrix;
use semimod::{lean_to_matrix, matrix_to_lean};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(m) = parse_matrix(text) else { return };
    // Stay within enumerable sizes.
    if m.top().iter().chain(m.bottom()).sum::<i64>() > 200 {
        return;
    }
    if let Ok((lean, rotation)) = matrix_to_lean(&m) {
        assert_eq!(lean_to_matrix(&lean), m.rotated(rotation));
    }
});
