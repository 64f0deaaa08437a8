//! Arithmetic of a two-generated numerical semigroup `<alpha, beta>`.
//!
//! Every integer outside the semigroup can be written uniquely as
//! `alpha*beta - a*alpha - b*beta` with `a, b >= 1` and `b < alpha` (for the
//! positive gaps also `a < beta`). These Rosales coordinates drive
//! membership tests and the partial order `<_L` on gaps.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// `<alpha, beta>` with `2 <= alpha < beta` and `gcd(alpha, beta) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalSemigroup {
    alpha: i64,
    beta: i64,
}

/// Rosales coordinates of a non-element: `gap = alpha*beta - a*alpha - b*beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GapCoord {
    pub a: i64,
    pub b: i64,
}

impl GapCoord {
    pub fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }
}

impl fmt::Display for GapCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={},b={})", self.a, self.b)
    }
}

// Leaves room for the 2*alpha*beta scan windows used throughout the crate.
const PRODUCT_LIMIT: i64 = i64::MAX / 8;

impl NumericalSemigroup {
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        let invalid = |reason| Error::InvalidSemigroup {
            alpha,
            beta,
            reason,
        };
        if alpha < 2 {
            return Err(invalid("alpha must be at least 2"));
        }
        if alpha >= beta {
            return Err(invalid("alpha must be smaller than beta"));
        }
        if alpha.gcd(&beta) != 1 {
            return Err(invalid("generators are not coprime"));
        }
        match alpha.checked_mul(beta) {
            Some(p) if p <= PRODUCT_LIMIT => Ok(Self { alpha, beta }),
            _ => Err(invalid("alpha*beta overflows")),
        }
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    pub fn product(&self) -> i64 {
        self.alpha * self.beta
    }

    /// Largest gap, `alpha*beta - alpha - beta`.
    pub fn frobenius(&self) -> i64 {
        self.product() - self.alpha - self.beta
    }

    /// Smallest integer `c` such that every `x >= c` lies in the semigroup.
    pub fn conductor(&self) -> i64 {
        self.frobenius() + 1
    }

    pub fn gap_count(&self) -> usize {
        ((self.alpha - 1) * (self.beta - 1) / 2) as usize
    }

    pub fn contains(&self, ell: i64) -> bool {
        ell >= 0 && self.gap_coords(ell).is_none()
    }

    /// Rosales coordinates of `ell`, or `None` when `ell` is an element.
    ///
    /// For negative inputs `b` may equal `alpha` (when `alpha | ell`); for
    /// positive gaps the coordinates satisfy `a < beta` and `b < alpha`.
    pub fn gap_coords(&self, ell: i64) -> Option<GapCoord> {
        let (alpha, beta) = (self.alpha, self.beta);
        // a*alpha + b*beta = alpha*beta - ell, with b the least positive
        // residue that makes the right-hand side divisible by alpha.
        let target = self.product() - ell;
        let upper = if ell < 0 { alpha } else { alpha - 1 };
        (1..=upper).find_map(|b| {
            let rest = target - b * beta;
            (rest > 0 && rest % alpha == 0).then(|| GapCoord::new(rest / alpha, b))
        })
    }

    pub fn decode(&self, coord: GapCoord) -> i64 {
        self.product() - coord.a * self.alpha - coord.b * self.beta
    }

    /// All positive integers outside the semigroup, ascending.
    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius())
            .filter(|&x| !self.contains(x))
            .collect()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.alpha, self.beta)
    }
}

/// `g1 <_L g2` iff `a1 > a2` and `b1 < b2`.
///
/// Returns `Some(true)` if `g1 <_L g2`, `Some(false)` if `g2 <_L g1` and
/// `None` when the two are incomparable (including equal).
pub fn lgap_less(g1: GapCoord, g2: GapCoord) -> Option<bool> {
    match (g1.a.cmp(&g2.a), g1.b.cmp(&g2.b)) {
        (Ordering::Greater, Ordering::Less) => Some(true),
        (Ordering::Less, Ordering::Greater) => Some(false),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g57() -> NumericalSemigroup {
        NumericalSemigroup::new(5, 7).unwrap()
    }

    fn brute_contains(alpha: i64, beta: i64, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        (0..=x / alpha).any(|r| (x - r * alpha) % beta == 0)
    }

    #[test]
    fn constructor_rejects_bad_pairs() {
        assert!(NumericalSemigroup::new(4, 6).is_err());
        assert!(NumericalSemigroup::new(7, 5).is_err());
        assert!(NumericalSemigroup::new(1, 5).is_err());
        assert!(NumericalSemigroup::new(5, 5).is_err());
        assert!(NumericalSemigroup::new(3_000_000_001, 3_000_000_002).is_err());
        assert!(NumericalSemigroup::new(2, 3).is_ok());
    }

    #[test]
    fn membership_examples() {
        let g = g57();
        assert!(g.contains(0));
        assert!(!g.contains(23));
        assert!(g.contains(12));
        assert!(!g.contains(-1));
        assert!(!g.contains(-5));
        assert!(!g.contains(-35));
    }

    #[test]
    fn membership_matches_brute_force() {
        for (alpha, beta) in [(2, 3), (3, 4), (3, 5), (4, 5), (5, 7), (7, 12), (11, 13)] {
            let g = NumericalSemigroup::new(alpha, beta).unwrap();
            for x in -3..2 * alpha * beta {
                assert_eq!(g.contains(x), brute_contains(alpha, beta, x), "{g} {x}");
            }
            for x in g.conductor()..g.conductor() + 3 * beta {
                assert!(g.contains(x));
            }
        }
    }

    #[test]
    fn gap_coord_examples() {
        let g = g57();
        assert_eq!(g.gap_coords(9), Some(GapCoord::new(1, 3)));
        assert_eq!(g.gap_coords(8), Some(GapCoord::new(4, 1)));
        assert_eq!(g.gap_coords(12), None);
        assert_eq!(g.gap_coords(-5), Some(GapCoord::new(1, 5)));
    }

    #[test]
    fn gap_coords_decode_and_range() {
        for (alpha, beta) in [(2, 3), (3, 5), (5, 7), (6, 11)] {
            let g = NumericalSemigroup::new(alpha, beta).unwrap();
            for ell in -2 * alpha * beta..alpha * beta {
                match g.gap_coords(ell) {
                    Some(c) => {
                        assert!(c.a >= 1 && c.b >= 1);
                        assert_eq!(g.decode(c), ell);
                        if ell > 0 {
                            assert!(c.a < beta && c.b < alpha);
                        }
                    }
                    None => assert!(brute_contains(alpha, beta, ell)),
                }
            }
        }
    }

    #[test]
    fn gap_lists() {
        let g = g57();
        assert_eq!(g.gaps(), vec![1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23]);
        assert_eq!(g.gap_count(), 12);
        assert_eq!(g.frobenius(), 23);
        assert_eq!(NumericalSemigroup::new(2, 3).unwrap().gaps(), vec![1]);
        for (alpha, beta) in [(3, 4), (4, 9), (8, 13)] {
            let g = NumericalSemigroup::new(alpha, beta).unwrap();
            let brute: Vec<i64> = (1..alpha * beta)
                .filter(|&x| !brute_contains(alpha, beta, x))
                .collect();
            assert_eq!(g.gaps(), brute);
            assert_eq!(g.gaps().len(), g.gap_count());
        }
    }

    #[test]
    fn lorder_examples() {
        assert_eq!(
            lgap_less(GapCoord::new(4, 1), GapCoord::new(3, 2)),
            Some(true)
        );
        assert_eq!(
            lgap_less(GapCoord::new(1, 3), GapCoord::new(4, 1)),
            Some(false)
        );
        assert_eq!(lgap_less(GapCoord::new(2, 2), GapCoord::new(2, 2)), None);
        assert_eq!(lgap_less(GapCoord::new(2, 1), GapCoord::new(3, 2)), None);
    }

    #[test]
    fn gap_difference_sign_criterion() {
        for (alpha, beta) in [(3, 5), (5, 7), (4, 9)] {
            let g = NumericalSemigroup::new(alpha, beta).unwrap();
            let gaps = g.gaps();
            for &l1 in &gaps {
                for &l2 in gaps.iter().filter(|&&l2| l2 < l1) {
                    let comparable =
                        lgap_less(g.gap_coords(l1).unwrap(), g.gap_coords(l2).unwrap()).is_some();
                    assert_eq!(!g.contains(l1 - l2), comparable, "{g} {l1} {l2}");
                }
            }
        }
    }
}
