//! Degree data of the minimal graded free resolution of
//! `M_I = sum_{i in I} R t^i` over `R = F[t^alpha, t^beta]`.
//!
//! The first syzygy module is generated by `n + 1` bivectors whose degrees
//! are the syzygy generators `J`. From there on the resolution repeats with
//! period two, shifted by `a_1 * alpha`:
//!
//! ```text
//! F_0 = I,  F_1 = J,  F_{s+2} = F_s + a_1*alpha
//! ```
//!
//! Only degrees are tracked; no field arithmetic happens here.

use crate::error::{Error, Result};
use crate::semimodule::{LeanSet, Semimodule};
use crate::syzygy::syzygy_generators;

/// A first-syzygy generator supported on two positions:
/// `t^exp_a` at `pos_a` and `-t^exp_b` at `pos_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bivector {
    pub pos_a: usize,
    pub pos_b: usize,
    pub exp_a: i64,
    pub exp_b: i64,
    pub degree: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionDegrees {
    pub steps: Vec<Vec<i64>>,
    /// `a_1 * alpha`, or `0` for the free module.
    pub period_shift: i64,
}

fn bivector(lean: &LeanSet, pos_a: usize, exp_a: i64, pos_b: usize, exp_b: i64) -> Bivector {
    let gens = lean.gens();
    let degree = gens[pos_a] + exp_a;
    debug_assert_eq!(degree, gens[pos_b] + exp_b);
    Bivector {
        pos_a,
        pos_b,
        exp_a,
        exp_b,
        degree,
    }
}

/// `f_0, f_1, ..., f_n`; `f_n` is the wrap-around vector linking position
/// `0` with position `n`.
pub fn bivector_syzygies(lean: &LeanSet) -> Result<Vec<Bivector>> {
    let gamma = lean.gamma();
    let (alpha, beta) = (gamma.alpha(), gamma.beta());
    let c = lean.coords();
    let n = c.len();
    if n == 0 {
        return Err(Error::TooFewGenerators { needed: 2, got: 1 });
    }
    let mut out = Vec::with_capacity(n + 1);
    out.push(bivector(lean, 0, (beta - c[0].a) * alpha, 1, c[0].b * beta));
    for k in 1..n {
        out.push(bivector(
            lean,
            k,
            (c[k - 1].a - c[k].a) * alpha,
            k + 1,
            (c[k].b - c[k - 1].b) * beta,
        ));
    }
    out.push(bivector(
        lean,
        0,
        (alpha - c[n - 1].b) * beta,
        n,
        c[n - 1].a * alpha,
    ));
    Ok(out)
}

/// The first `num_steps` degree multisets. The free module `M_Gamma` has a
/// one-step resolution and always yields `[[0]]`.
pub fn resolution_degrees(lean: &LeanSet, num_steps: usize) -> Result<ResolutionDegrees> {
    if num_steps == 0 {
        return Err(Error::InvalidArgument(
            "number of steps must be positive".into(),
        ));
    }
    if lean.is_trivial() {
        return Ok(ResolutionDegrees {
            steps: vec![vec![0]],
            period_shift: 0,
        });
    }
    let shift = lean.coords()[0].a * lean.gamma().alpha();
    let j = syzygy_generators(lean)?.j;
    let mut steps: Vec<Vec<i64>> = vec![lean.gens().to_vec(), j];
    while steps.len() < num_steps {
        let next = steps[steps.len() - 2].iter().map(|d| d + shift).collect();
        steps.push(next);
    }
    steps.truncate(num_steps);
    Ok(ResolutionDegrees {
        steps,
        period_shift: shift,
    })
}

/// The semimodule generated by `0`, `b_k beta - (a_1 - a_{k+1}) alpha` for
/// `k < n` and `b_n beta - a_1 alpha`, whose dual is `Delta_I + a_1 alpha`.
pub fn hat_semimodule(lean: &LeanSet) -> Result<Semimodule> {
    let gamma = lean.gamma();
    let (alpha, beta) = (gamma.alpha(), gamma.beta());
    let c = lean.coords();
    let n = c.len();
    if n == 0 {
        return Err(Error::TooFewGenerators { needed: 2, got: 1 });
    }
    let mut gens = vec![0];
    for k in 0..n - 1 {
        gens.push(c[k].b * beta - (c[0].a - c[k + 1].a) * alpha);
    }
    gens.push(c[n - 1].b * beta - c[0].a * alpha);
    Semimodule::generated_by(gamma, &gens)
}
