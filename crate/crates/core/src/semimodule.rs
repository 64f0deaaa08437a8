//! Semimodules over `<alpha, beta>`, stored as a canonical lean generator
//! set plus an integer shift.
//!
//! A lean set `{0, i_1, ..., i_n}` is the minimal generating system of a
//! semimodule whose minimum is `0`. Its nonzero entries are gaps whose
//! Rosales coordinates form a chain under `<_L`; we keep them in ascending
//! `<_L` order, i.e. with `a` strictly decreasing and `b` strictly
//! increasing. Two semimodules are isomorphic exactly when their lean sets
//! coincide.

use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::{lgap_less, GapCoord, NumericalSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeanSet {
    gamma: NumericalSemigroup,
    gens: Vec<i64>,
    coords: Vec<GapCoord>,
}

impl LeanSet {
    /// The class of the semigroup itself, `{0}`.
    pub fn trivial(gamma: NumericalSemigroup) -> Self {
        Self {
            gamma,
            gens: vec![0],
            coords: Vec::new(),
        }
    }

    /// Validates an already canonical generator list `[0, i_1, ..., i_n]`.
    pub fn new(gamma: NumericalSemigroup, gens: Vec<i64>) -> Result<Self> {
        match gens.first() {
            Some(0) => {}
            _ => return Err(Error::NotCanonical("first generator must be 0".into())),
        }
        let coords = gens[1..]
            .iter()
            .map(|&g| {
                if g <= 0 {
                    return Err(Error::NotCanonical(format!("{g} is not positive")));
                }
                gamma
                    .gap_coords(g)
                    .ok_or_else(|| Error::NotCanonical(format!("{g} lies in {gamma}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::check_chain(&coords)?;
        Ok(Self {
            gamma,
            gens,
            coords,
        })
    }

    /// Builds the lean set whose gaps have the given coordinates, listed in
    /// ascending `<_L` order.
    pub fn from_coords(gamma: NumericalSemigroup, coords: Vec<GapCoord>) -> Result<Self> {
        let mut gens = Vec::with_capacity(coords.len() + 1);
        gens.push(0);
        for &c in &coords {
            let g = gamma.decode(c);
            if g <= 0 || c.a < 1 || c.b < 1 {
                return Err(Error::NotCanonical(format!("{c} is not a positive gap")));
            }
            gens.push(g);
        }
        Self::check_chain(&coords)?;
        Ok(Self {
            gamma,
            gens,
            coords,
        })
    }

    fn check_chain(coords: &[GapCoord]) -> Result<()> {
        for w in coords.windows(2) {
            if lgap_less(w[0], w[1]) != Some(true) {
                return Err(Error::NotCanonical(format!(
                    "coordinates {} and {} are not ascending in <_L",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }

    pub fn gamma(&self) -> NumericalSemigroup {
        self.gamma
    }

    /// Generators in canonical order, starting with `0`.
    pub fn gens(&self) -> &[i64] {
        &self.gens
    }

    /// Rosales coordinates of `i_1, ..., i_n`.
    pub fn coords(&self) -> &[GapCoord] {
        &self.coords
    }

    /// Number of minimal generators, `n + 1`.
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    /// Never true: every lean set contains `0`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The index `n` of the last gap, i.e. `len() - 1`.
    pub fn n(&self) -> usize {
        self.gens.len() - 1
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn max_gen(&self) -> i64 {
        self.gens.iter().copied().max().unwrap_or(0)
    }

    pub fn member(&self, x: i64) -> bool {
        self.gens.iter().any(|&i| self.gamma.contains(x - i))
    }

    /// Generators sorted numerically, for display and set comparisons.
    pub fn sorted_gens(&self) -> Vec<i64> {
        let mut v = self.gens.clone();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for LeanSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

/// Minimal generators of the semimodule generated by `generators`, shifted
/// so that its minimum is `0`, together with that shift.
///
/// Duplicates are ignored. Returns [`Error::EmptyGenerators`] for an empty
/// input.
pub fn normalize(gamma: NumericalSemigroup, generators: &[i64]) -> Result<(LeanSet, i64)> {
    let mut sorted = generators.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let shift = *sorted.first().ok_or(Error::EmptyGenerators)?;

    // y + Gamma only reaches values >= y, so scanning ascending and testing
    // against the kept generators is enough.
    let mut kept: Vec<i64> = Vec::new();
    for x in sorted.into_iter().map(|x| x - shift) {
        if !kept.iter().any(|&y| gamma.contains(x - y)) {
            kept.push(x);
        }
    }
    let mut pairs: Vec<(GapCoord, i64)> = kept[1..]
        .iter()
        .map(|&g| (gamma.gap_coords(g).expect("kept generators are gaps"), g))
        .collect();
    pairs.sort_by_key(|p| std::cmp::Reverse(p.0.a));
    let (coords, rest): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    let mut gens = Vec::with_capacity(rest.len() + 1);
    gens.push(0);
    gens.extend(rest);
    let lean = LeanSet {
        gamma,
        gens,
        coords,
    };
    debug_assert!(LeanSet::check_chain(&lean.coords).is_ok());
    Ok((lean, shift))
}

/// A semimodule `shift + Delta_lean`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Semimodule {
    pub lean: LeanSet,
    pub shift: i64,
}

impl Semimodule {
    pub fn new(lean: LeanSet, shift: i64) -> Self {
        Self { lean, shift }
    }

    pub fn generated_by(gamma: NumericalSemigroup, generators: &[i64]) -> Result<Self> {
        let (lean, shift) = normalize(gamma, generators)?;
        Ok(Self { lean, shift })
    }

    /// Normalizes the set of integers in `[lo, hi)` accepted by `member`.
    ///
    /// The caller guarantees that the described semimodule has no elements
    /// below `lo` and that every integer in `[hi - alpha, inf)` is an
    /// element, so the window holds a complete generating system.
    pub(crate) fn from_window(
        gamma: NumericalSemigroup,
        lo: i64,
        hi: i64,
        member: impl Fn(i64) -> bool,
    ) -> Self {
        let elements: Vec<i64> = (lo..hi).filter(|&x| member(x)).collect();
        Self::generated_by(gamma, &elements).expect("window contains the tail of the semimodule")
    }

    pub fn gamma(&self) -> NumericalSemigroup {
        self.lean.gamma()
    }

    pub fn min(&self) -> i64 {
        self.shift
    }

    pub fn max_gen(&self) -> i64 {
        self.shift + self.lean.max_gen()
    }

    pub fn generators(&self) -> impl Iterator<Item = i64> + '_ {
        self.lean.gens().iter().map(move |g| g + self.shift)
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lean.member(x - self.shift)
    }

    pub fn shifted(&self, d: i64) -> Self {
        Self {
            lean: self.lean.clone(),
            shift: self.shift + d,
        }
    }

    /// Every element at or above this bound lies in the semimodule.
    pub fn saturation_bound(&self) -> i64 {
        self.shift + self.gamma().conductor()
    }
}

impl From<LeanSet> for Semimodule {
    fn from(lean: LeanSet) -> Self {
        Self { lean, shift: 0 }
    }
}

impl fmt::Display for Semimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}", self.shift, self.lean)
    }
}

/// `Hom(source, target) = { c : c + source ⊆ target }`.
///
/// `c` ranges over a window bounded below by `min target - max gen source`
/// and above by `min target - min source + conductor`; past the upper end
/// every `c` belongs to the result.
pub fn hom(source: &Semimodule, target: &Semimodule) -> Result<Semimodule> {
    let gamma = source.gamma();
    if gamma != target.gamma() {
        return Err(Error::SemigroupMismatch);
    }
    let lo = target.min() - source.max_gen();
    let top = target.min() - source.min() + gamma.conductor();
    let gens: Vec<i64> = source.generators().collect();
    Ok(Semimodule::from_window(
        gamma,
        lo,
        top + gamma.alpha(),
        |c| c >= top || gens.iter().all(|&g| target.contains(c + g)),
    ))
}

pub fn is_isomorphic(d1: &LeanSet, d2: &LeanSet) -> bool {
    d1 == d2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(alpha: i64, beta: i64) -> NumericalSemigroup {
        NumericalSemigroup::new(alpha, beta).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let (lean, shift) = normalize(g(5, 7), &[0, 9, 6, 8]).unwrap();
        assert_eq!(lean.gens(), &[0, 8, 6, 9]);
        assert_eq!(
            lean.coords(),
            &[
                GapCoord::new(4, 1),
                GapCoord::new(3, 2),
                GapCoord::new(1, 3)
            ]
        );
        assert_eq!(shift, 0);

        let (lean, shift) = normalize(g(5, 7), &[5, 12]).unwrap();
        assert_eq!(lean.gens(), &[0]);
        assert_eq!(shift, 5);

        let (lean, shift) = normalize(g(5, 7), &[0, 1, 6]).unwrap();
        assert_eq!(lean.gens(), &[0, 1]);
        assert_eq!(shift, 0);

        let (lean, _) = normalize(g(5, 7), &[9, 9, 0, 6, 8, 8]).unwrap();
        assert_eq!(lean.gens(), &[0, 8, 6, 9]);

        assert_eq!(normalize(g(5, 7), &[]), Err(Error::EmptyGenerators));
    }

    #[test]
    fn validating_constructor() {
        let gamma = g(5, 7);
        assert!(LeanSet::new(gamma, vec![0, 8, 6, 9]).is_ok());
        assert!(LeanSet::new(gamma, vec![0, 9, 6, 8]).is_err());
        assert!(LeanSet::new(gamma, vec![8, 0]).is_err());
        assert!(LeanSet::new(gamma, vec![0, 12]).is_err());
        assert!(LeanSet::new(gamma, vec![0, 1, 6]).is_err());
        assert!(LeanSet::new(gamma, vec![]).is_err());
    }

    #[test]
    fn member_examples() {
        let lean = LeanSet::new(g(5, 7), vec![0, 8, 6, 9]).unwrap();
        assert!(lean.member(13));
        assert!(!lean.member(4));
        assert!(!LeanSet::trivial(g(5, 7)).member(-1));
    }

    #[test]
    fn isomorphism_examples() {
        let gamma = g(5, 7);
        let a = LeanSet::new(gamma, vec![0, 1]).unwrap();
        assert!(is_isomorphic(&a, &a.clone()));
        assert!(is_isomorphic(&normalize(gamma, &[3, 4]).unwrap().0, &a));
        let b = LeanSet::new(gamma, vec![0, 2]).unwrap();
        assert!(!is_isomorphic(&a, &b));
    }

    #[test]
    fn hom_examples() {
        let gamma = g(5, 7);
        let trivial = Semimodule::from(LeanSet::trivial(gamma));
        assert_eq!(hom(&trivial, &trivial).unwrap(), trivial);

        let delta = Semimodule::generated_by(gamma, &[0, 9, 6, 8]).unwrap();
        let h = hom(&delta, &trivial).unwrap();
        assert_eq!(h.lean.sorted_gens(), vec![0, 1, 2, 3]);
        assert_eq!(h.shift, 19);

        let other = Semimodule::from(LeanSet::trivial(g(3, 5)));
        assert_eq!(hom(&trivial, &other), Err(Error::SemigroupMismatch));
    }
}
