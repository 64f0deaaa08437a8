//! Selfdual classes: detection, palindromic matrix forms, census against
//! the closed-form counts, and the parity maps between `<alpha, beta>` and
//! `<alpha + 1, beta>` (resp. `<alpha, beta + 1>`).
//!
//! A class is selfdual when its matrix is fixed, up to rotation, by the
//! dual rule. Some rotation then takes one of three shapes (with `N`
//! columns and `l = floor(N / 2)`):
//!
//! * odd palindrome (`N = 2l + 1`): top row a palindrome centred at column
//!   `l`, first `2l` bottom entries a palindrome, last bottom entry free;
//! * even/even blocks (`N = 2l`): top row an even palindrome, first `2l - 1`
//!   bottom entries a palindrome centred at column `l - 1`;
//! * odd/odd blocks (`N = 2l`): top row minus its first entry a palindrome
//!   centred at column `l`, bottom row an even palindrome.

use std::collections::BTreeMap;

use num_integer::binomial;

use crate::error::{Error, Result};
use crate::pathmatrix::{enumerate_classes, lean_to_matrix, matrix_equiv, PathMatrix};
use crate::semigroup::NumericalSemigroup;
use crate::semimodule::LeanSet;
use crate::syzygy::dual_matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormKind {
    OddPalindrome,
    EvenEvenBlocks,
    OddOddBlocks,
    NotSelfdual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelfdualForm {
    pub kind: FormKind,
    /// Left rotation bringing the matrix into the matched shape.
    pub rotation: Option<usize>,
    /// Column (in the caller's indexing) of the central element.
    pub pivot: Option<usize>,
}

fn is_palindrome(v: &[i64]) -> bool {
    v.iter().eq(v.iter().rev())
}

fn is_odd_palindrome(m: &PathMatrix) -> bool {
    let n = m.columns();
    n % 2 == 1 && is_palindrome(m.top()) && is_palindrome(&m.bottom()[..n - 1])
}

fn is_even_even_blocks(m: &PathMatrix) -> bool {
    let n = m.columns();
    n.is_multiple_of(2) && is_palindrome(m.top()) && is_palindrome(&m.bottom()[..n - 1])
}

fn is_odd_odd_blocks(m: &PathMatrix) -> bool {
    m.columns().is_multiple_of(2) && is_palindrome(&m.top()[1..]) && is_palindrome(m.bottom())
}

fn find_rotation(
    m: &PathMatrix,
    pred: impl Fn(&PathMatrix) -> bool,
) -> Option<(usize, PathMatrix)> {
    (0..m.columns())
        .map(|r| (r, m.rotated(r)))
        .find(|(_, rm)| pred(rm))
}

pub fn is_selfdual_matrix(m: &PathMatrix) -> bool {
    matrix_equiv(m, &dual_matrix(m))
}

pub fn is_selfdual(lean: &LeanSet) -> bool {
    is_selfdual_matrix(&lean_to_matrix(lean))
}

type ShapeTest = fn(&PathMatrix) -> bool;

/// Which palindromic shape some rotation of `m` takes.
pub fn classify_form(m: &PathMatrix) -> SelfdualForm {
    let n = m.columns();
    let half = n / 2;
    let candidates: [(FormKind, ShapeTest, usize); 3] = [
        (FormKind::OddPalindrome, is_odd_palindrome, half),
        (
            FormKind::EvenEvenBlocks,
            is_even_even_blocks,
            half.saturating_sub(1),
        ),
        (FormKind::OddOddBlocks, is_odd_odd_blocks, half),
    ];
    for (kind, pred, centre) in candidates {
        if let Some((r, _)) = find_rotation(m, pred) {
            return SelfdualForm {
                kind,
                rotation: Some(r),
                pivot: Some((r + centre) % n),
            };
        }
    }
    SelfdualForm {
        kind: FormKind::NotSelfdual,
        rotation: None,
        pivot: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub generator_count: usize,
    pub observed: u64,
    pub expected: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub gamma: NumericalSemigroup,
    pub classes: u64,
    pub rows: Vec<CensusRow>,
    pub total_observed: u64,
    /// `C(floor(alpha/2) + floor(beta/2), floor(alpha/2))`.
    pub total_expected: u64,
}

impl CensusReport {
    pub fn matches(&self) -> bool {
        self.rows.iter().all(|r| r.observed == r.expected)
            && self.total_observed == self.total_expected
            && self.rows.iter().map(|r| r.expected).sum::<u64>() == self.total_expected
    }
}

fn choose(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        0
    } else {
        binomial(n as u64, k as u64)
    }
}

pub fn expected_total(gamma: NumericalSemigroup) -> u64 {
    let (a, b) = (gamma.alpha() / 2, gamma.beta() / 2);
    choose(a + b, a)
}

/// Closed-form number of selfdual classes per generator count.
pub fn expected_counts(gamma: NumericalSemigroup) -> BTreeMap<usize, u64> {
    let (alpha, beta) = (gamma.alpha(), gamma.beta());
    let (fa, fb) = (alpha / 2, beta / 2);
    let mut out = BTreeMap::new();
    let mut put = |count: i64, value: u64| {
        if value > 0 {
            *out.entry(count as usize).or_insert(0) += value;
        }
    };
    match (alpha % 2 == 0, beta % 2 == 0) {
        (false, false) => {
            for l in 0..=fa {
                put(2 * l + 1, choose(fa, l) * choose(fb, l));
            }
        }
        (true, false) => {
            for l in 0..=fa {
                put(2 * l + 1, choose(fa - 1, l) * choose(fb, l));
                put(2 * l, choose(fa - 1, l - 1) * choose(fb, l));
            }
        }
        (false, true) => {
            for l in 0..=fa {
                put(2 * l + 1, choose(fa, l) * choose(fb - 1, l));
                put(2 * l, choose(fa, l) * choose(fb - 1, l - 1));
            }
        }
        (true, true) => unreachable!("coprime generators are never both even"),
    }
    out
}

/// Selfdual classes by generator count, from a full enumeration.
pub fn observed_counts(gamma: NumericalSemigroup) -> (u64, BTreeMap<usize, u64>) {
    let mut classes = 0;
    let mut out = BTreeMap::new();
    for lean in enumerate_classes(gamma) {
        classes += 1;
        if is_selfdual(&lean) {
            *out.entry(lean.len()).or_insert(0) += 1;
        }
    }
    (classes, out)
}

pub fn census(gamma: NumericalSemigroup) -> CensusReport {
    let (classes, observed) = observed_counts(gamma);
    let expected = expected_counts(gamma);
    let mut keys: Vec<usize> = observed.keys().chain(expected.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let rows = keys
        .into_iter()
        .map(|k| CensusRow {
            generator_count: k,
            observed: observed.get(&k).copied().unwrap_or(0),
            expected: expected.get(&k).copied().unwrap_or(0),
        })
        .collect();
    CensusReport {
        gamma,
        classes,
        rows,
        total_observed: observed.values().sum(),
        total_expected: expected_total(gamma),
    }
}

/// For odd `alpha` and `beta`: every selfdual class has an odd number of
/// generators.
pub fn parity_invariant_check(gamma: NumericalSemigroup) -> Result<bool> {
    if gamma.alpha() % 2 == 0 || gamma.beta() % 2 == 0 {
        return Err(Error::WrongParity(format!("{gamma} has an even generator")));
    }
    Ok(enumerate_classes(gamma).all(|l| !is_selfdual(&l) || l.len() % 2 == 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityDirection {
    /// `<alpha, beta> -> <alpha + 1, beta>` for even `alpha`.
    AlphaUp,
    /// `<alpha, beta> -> <alpha - 1, beta>` for odd `alpha` and `beta`.
    AlphaDown,
    /// `<alpha, beta> -> <alpha, beta + 1>` for even `beta`.
    BetaUp,
    /// `<alpha, beta> -> <alpha, beta - 1>` for odd `alpha` and `beta`.
    BetaDown,
}

impl ParityDirection {
    pub fn target(self, gamma: NumericalSemigroup) -> Result<NumericalSemigroup> {
        let (alpha, beta) = (gamma.alpha(), gamma.beta());
        let need = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::WrongParity(format!(
                    "{self:?} needs {what}, got {gamma}"
                )))
            }
        };
        match self {
            ParityDirection::AlphaUp => {
                need(alpha % 2 == 0, "even alpha")?;
                NumericalSemigroup::new(alpha + 1, beta)
            }
            ParityDirection::AlphaDown => {
                need(alpha % 2 == 1 && beta % 2 == 1, "odd alpha and beta")?;
                NumericalSemigroup::new(alpha - 1, beta)
            }
            ParityDirection::BetaUp => {
                need(beta % 2 == 0, "even beta")?;
                NumericalSemigroup::new(alpha, beta + 1)
            }
            ParityDirection::BetaDown => {
                need(alpha % 2 == 1 && beta % 2 == 1, "odd alpha and beta")?;
                NumericalSemigroup::new(alpha, beta - 1)
            }
        }
    }
}

/// Maps the matrix of a selfdual class to the matrix of a selfdual class
/// over the parity-adjusted semigroup.
pub fn parity_bijection(m: &PathMatrix, direction: ParityDirection) -> Result<PathMatrix> {
    let gamma = m.gamma()?;
    direction.target(gamma)?;
    let n = m.columns();
    let half = n / 2;
    let (top, bottom) = match direction {
        ParityDirection::AlphaUp if n % 2 == 1 => {
            let (_, rm) = find_rotation(m, is_odd_palindrome).ok_or(Error::NotSelfdualForm)?;
            let (mut top, bottom) = (rm.top().to_vec(), rm.bottom().to_vec());
            top[half] += 1;
            (top, bottom)
        }
        ParityDirection::AlphaUp => {
            let (_, rm) = find_rotation(m, |rm| {
                is_even_even_blocks(rm) && rm.bottom()[half - 1] % 2 == 0
            })
            .ok_or(Error::NotSelfdualForm)?;
            let mut top = rm.top().to_vec();
            let mut bottom = rm.bottom().to_vec();
            top.insert(half, 1);
            let split = bottom[half - 1] / 2;
            bottom[half - 1] = split;
            bottom.insert(half, split);
            (top, bottom)
        }
        ParityDirection::BetaUp if n % 2 == 1 => {
            let (_, rm) = find_rotation(m, is_odd_palindrome).ok_or(Error::NotSelfdualForm)?;
            let (top, mut bottom) = (rm.top().to_vec(), rm.bottom().to_vec());
            bottom[n - 1] += 1;
            (top, bottom)
        }
        ParityDirection::BetaUp => {
            let (_, rm) = find_rotation(m, |rm| is_odd_odd_blocks(rm) && rm.top()[0] % 2 == 0)
                .ok_or(Error::NotSelfdualForm)?;
            let mut top = rm.top().to_vec();
            let mut bottom = rm.bottom().to_vec();
            let split = top[0] / 2;
            top[0] = split;
            top.push(split);
            bottom.push(1);
            (top, bottom)
        }
        ParityDirection::AlphaDown => {
            let (_, rm) = find_rotation(m, is_odd_palindrome).ok_or(Error::NotSelfdualForm)?;
            let mut top = rm.top().to_vec();
            let mut bottom = rm.bottom().to_vec();
            if top[half] > 1 {
                top[half] -= 1;
            } else {
                // y_l = 1 forces l >= 1 because alpha >= 3 here
                top.remove(half);
                let merged = bottom.remove(half);
                bottom[half - 1] += merged;
            }
            (top, bottom)
        }
        ParityDirection::BetaDown => {
            let (_, rm) = find_rotation(m, is_odd_palindrome).ok_or(Error::NotSelfdualForm)?;
            let mut top = rm.top().to_vec();
            let mut bottom = rm.bottom().to_vec();
            if bottom[n - 1] > 1 {
                bottom[n - 1] -= 1;
            } else {
                let last = top.pop().expect("nonempty");
                bottom.pop();
                top[0] += last;
            }
            (top, bottom)
        }
    };
    PathMatrix::new(top, bottom)
}
