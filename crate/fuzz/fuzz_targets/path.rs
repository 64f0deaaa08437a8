#![no_main]

use libfuzzer_sys::fuzz_target;
use semimod::parse::parse_path;
use semimod::{lean_to_path, path_to_lean, NumericalSemigroup};

fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else { return };
    let alpha = 2 + i64::from(sel % 8);
    let beta = alpha + 1 + i64::from(sel / 8 % 9);
    let Ok(gamma) = NumericalSemigroup::new(alpha, beta) else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let Ok(path) = parse_path(gamma, text) else { return };
    let lean = path_to_lean(&path).expect("valid paths decode");
    assert_eq!(lean_to_path(&lean), path);
});
