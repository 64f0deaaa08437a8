//! Text forms accepted by the command line and the fuzz targets.
//!
//! * generator lists: integers separated by commas and/or whitespace,
//!   optionally wrapped in braces, e.g. `{0, 9, 6, 8}`;
//! * path matrices: two rows separated by `/`, e.g. `2,1,1,1/1,2,1,3` or
//!   `(2 1 1 1)/(1 2 1 3)`;
//! * lattice paths: a word over `D` (down) and `R` (right), case-insensitive.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pathmatrix::{LatticePath, PathMatrix, Step};
use crate::semigroup::NumericalSemigroup;

fn parse_row(s: &str) -> Result<Vec<i64>> {
    let inner = s.trim();
    let inner = inner
        .strip_prefix(['(', '{', '['])
        .map(|t| {
            t.strip_suffix([')', '}', ']'])
                .ok_or_else(|| Error::Parse(format!("unbalanced brackets in {s:?}")))
        })
        .transpose()?
        .unwrap_or(inner);
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

pub fn parse_generators(s: &str) -> Result<Vec<i64>> {
    let gens = parse_row(s)?;
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    Ok(gens)
}

pub fn parse_matrix(s: &str) -> Result<PathMatrix> {
    let mut rows = s.split('/');
    let (top, bottom) = match (rows.next(), rows.next(), rows.next()) {
        (Some(t), Some(b), None) => (parse_row(t)?, parse_row(b)?),
        _ => {
            return Err(Error::Parse(
                "a matrix has exactly two rows separated by '/'".into(),
            ))
        }
    };
    PathMatrix::new(top, bottom)
}

pub fn parse_steps(s: &str) -> Result<Vec<Step>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c.to_ascii_uppercase() {
            'D' => Ok(Step::Down),
            'R' => Ok(Step::Right),
            other => Err(Error::Parse(format!("unexpected step {other:?}"))),
        })
        .collect()
}

pub fn parse_path(gamma: NumericalSemigroup, s: &str) -> Result<LatticePath> {
    LatticePath::new(gamma, parse_steps(s)?)
}

impl FromStr for PathMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_matrix(s)
    }
}
