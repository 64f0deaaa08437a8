#![allow(dead_code)]

use semimod::{NumericalSemigroup, Semimodule};

/// Membership by searching `x = r*alpha + s*beta`, independent of the
/// Rosales criterion.
pub fn brute_contains(gamma: NumericalSemigroup, x: i64) -> bool {
    if x < 0 {
        return false;
    }
    let (alpha, beta) = (gamma.alpha(), gamma.beta());
    (0..=x / alpha).any(|r| (x - r * alpha) % beta == 0)
}

pub fn brute_member(gamma: NumericalSemigroup, gens: &[i64], x: i64) -> bool {
    gens.iter().any(|&g| brute_contains(gamma, x - g))
}

/// Elements of a semimodule inside `[lo, hi)`, by brute force.
pub fn window(delta: &Semimodule, lo: i64, hi: i64) -> Vec<i64> {
    let gens: Vec<i64> = delta.generators().collect();
    (lo..hi)
        .filter(|&x| brute_member(delta.gamma(), &gens, x))
        .collect()
}

pub fn coprime_pairs(max_sum: i64) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    for alpha in 2..max_sum {
        for beta in alpha + 1..=max_sum - alpha {
            if let Ok(g) = NumericalSemigroup::new(alpha, beta) {
                out.push(g);
            }
        }
    }
    out
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Rational Catalan number `C(alpha + beta, alpha) / (alpha + beta)`.
pub fn rational_catalan(gamma: NumericalSemigroup) -> u64 {
    let (a, b) = (gamma.alpha() as u64, gamma.beta() as u64);
    binom(a + b, a) / (a + b)
}
