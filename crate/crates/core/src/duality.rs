//! The dual `Delta* = Hom(Delta, Gamma) = { c : c + Delta ⊆ Gamma }`.
//!
//! For a canonical lean set with coordinates `(a_k, b_k)` the dual is
//! generated by
//!
//! ```text
//! a_1*alpha,  a_{k+1}*alpha + b_k*beta (k = 1..n-1),  b_n*beta
//! ```
//!
//! which [`dual`] evaluates directly. [`dual_oracle`] recomputes the same
//! semimodule from the intersection `⋂ (Gamma - i)` by scanning.

use crate::semimodule::{normalize, LeanSet, Semimodule};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualResult {
    /// The `n + 1` generators in formula order, before normalization.
    pub raw_generators: Vec<i64>,
    pub class: LeanSet,
    pub shift: i64,
}

impl DualResult {
    pub fn semimodule(&self) -> Semimodule {
        Semimodule::new(self.class.clone(), self.shift)
    }
}

/// Closed-form generators of the dual, in formula order.
pub fn dual_generators(lean: &LeanSet) -> Vec<i64> {
    let gamma = lean.gamma();
    let (alpha, beta) = (gamma.alpha(), gamma.beta());
    let c = lean.coords();
    let n = c.len();
    if n == 0 {
        return vec![0];
    }
    let mut raw = Vec::with_capacity(n + 1);
    raw.push(c[0].a * alpha);
    for k in 0..n - 1 {
        raw.push(c[k + 1].a * alpha + c[k].b * beta);
    }
    raw.push(c[n - 1].b * beta);
    raw
}

pub fn dual(lean: &LeanSet) -> DualResult {
    let raw_generators = dual_generators(lean);
    let (class, shift) =
        normalize(lean.gamma(), &raw_generators).expect("dual generator list is nonempty");
    DualResult {
        raw_generators,
        class,
        shift,
    }
}

/// Dual of an arbitrary (shifted) semimodule by the shift law
/// `(Delta + d)* = Delta* - d`.
pub fn dual_semimodule(delta: &Semimodule) -> Semimodule {
    dual(&delta.lean).semimodule().shifted(-delta.shift)
}

/// Brute-force dual: scans `c` and keeps those with `c + i ∈ Gamma` for
/// every generator `i`.
pub fn dual_oracle(delta: &Semimodule) -> Semimodule {
    let gamma = delta.gamma();
    let gens: Vec<i64> = delta.generators().collect();
    let lo = -delta.max_gen();
    // c + i >= conductor for all i once c >= conductor - min.
    let top = gamma.conductor() - delta.min();
    Semimodule::from_window(gamma, lo, top + gamma.alpha(), |c| {
        gens.iter().all(|&i| gamma.contains(c + i))
    })
}

/// The renumbered generators `î_1, ..., î_n` of `Delta* - a_1*alpha`.
///
/// These generate the same set as the shifted formula output; they are not
/// normalized and may be negative.
pub fn hat_generators(lean: &LeanSet) -> Vec<i64> {
    let gamma = lean.gamma();
    let (alpha, beta) = (gamma.alpha(), gamma.beta());
    let c = lean.coords();
    let n = c.len();
    if n == 0 {
        return Vec::new();
    }
    let ab = gamma.product();
    // 1-based a_k is c[k-1].a
    let a = |k: usize| c[k - 1].a;
    let b = |k: usize| c[k - 1].b;
    let mut out = Vec::with_capacity(n);
    out.push(ab - a(1) * alpha - (alpha - b(n)) * beta);
    for k in 2..=n {
        out.push(ab - (a(1) - a(n - k + 2)) * alpha - (alpha - b(n - k + 1)) * beta);
    }
    out
}

/// Checks `(Delta*)* ≅ Delta` and that the intermediate class matches the
/// renumbered generators `{0, î_1, ..., î_n}`.
pub fn dual_dual_check(lean: &LeanSet) -> bool {
    let first = dual(lean);
    let mut hat = vec![0];
    hat.extend(hat_generators(lean));
    let (hat_class, _) = normalize(lean.gamma(), &hat).expect("nonempty");
    if hat_class != first.class {
        return false;
    }
    let second = dual(&first.class);
    let (back, _) = normalize(lean.gamma(), &second.raw_generators).expect("nonempty");
    back == *lean
}
