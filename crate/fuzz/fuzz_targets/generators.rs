#![no_main]

use libfuzzer_sys::fuzz_target;
use semimod::parse::parse_generators;
use semimod::{normalize, LeanSet, NumericalSemigroup};

// First byte picks a small semigroup, the rest is a generator list.
fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else { return };
    let alpha = 2 + i64::from(sel % 6);
    let beta = alpha + 1 + i64::from(sel / 6 % 7);
    let Ok(gamma) = NumericalSemigroup::new(alpha, beta) else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let Ok(gens) = parse_generators(text) else { return };
    if gens.iter().any(|g| g.unsigned_abs() > 1 << 20) {
        return;
    }
    let (lean, _) = normalize(gamma, &gens).expect("nonempty input normalizes");
    assert!(LeanSet::new(gamma, lean.gens().to_vec()).is_ok());
    assert_eq!(normalize(gamma, lean.gens()).unwrap(), (lean, 0));
});
