//! Lean sets as lattice paths and as two-row matrices.
//!
//! A class over `<alpha, beta>` corresponds to a lattice path from
//! `(0, alpha)` to `(beta, 0)` made of `Down` and `Right` unit steps whose
//! vertices satisfy `alpha*x + beta*y <= alpha*beta`. The points where the
//! path turns from `Right` to `Down` are exactly the Rosales coordinates
//! `(a_k, b_k)` of the nonzero generators.
//!
//! Column `i` of the path matrix holds the length of the `i`-th run of
//! `Down` steps (top row, summing to `alpha`) and of the following run of
//! `Right` steps (bottom row, summing to `beta`). Any positive matrix with
//! these row sums has exactly one cyclic column rotation that describes a
//! path below the diagonal.

use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::{GapCoord, NumericalSemigroup};
use crate::semimodule::LeanSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Down,
    Right,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Down => 'D',
            Step::Right => 'R',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    gamma: NumericalSemigroup,
    steps: Vec<Step>,
}

impl LatticePath {
    /// Validates step counts and the below-diagonal condition.
    pub fn new(gamma: NumericalSemigroup, steps: Vec<Step>) -> Result<Self> {
        let downs = steps.iter().filter(|&&s| s == Step::Down).count() as i64;
        let rights = steps.len() as i64 - downs;
        if downs != gamma.alpha() || rights != gamma.beta() {
            return Err(Error::InvalidPath(format!(
                "expected {} down and {} right steps, got {downs} and {rights}",
                gamma.alpha(),
                gamma.beta()
            )));
        }
        let path = Self { gamma, steps };
        if let Some((x, y)) = path.vertices().find(|&(x, y)| !below_diagonal(gamma, x, y)) {
            return Err(Error::InvalidPath(format!(
                "vertex ({x},{y}) lies above the diagonal"
            )));
        }
        Ok(path)
    }

    pub fn gamma(&self) -> NumericalSemigroup {
        self.gamma
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// All vertices from `(0, alpha)` to `(beta, 0)`.
    pub fn vertices(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        let start = (0, self.gamma.alpha());
        std::iter::once(start).chain(self.steps.iter().scan(start, |pos, step| {
            match step {
                Step::Down => pos.1 -= 1,
                Step::Right => pos.0 += 1,
            }
            Some(*pos)
        }))
    }

    /// Vertices where a `Right` step is followed by a `Down` step, in path
    /// order (increasing `x`).
    pub fn turning_points(&self) -> Vec<GapCoord> {
        let mut out = Vec::new();
        let (mut x, mut y) = (0, self.gamma.alpha());
        for w in self.steps.windows(2) {
            match w[0] {
                Step::Down => y -= 1,
                Step::Right => x += 1,
            }
            if w == [Step::Right, Step::Down] {
                out.push(GapCoord::new(x, y));
            }
        }
        out
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.as_char()).collect()
    }
}

fn below_diagonal(gamma: NumericalSemigroup, x: i64, y: i64) -> bool {
    gamma.alpha() * x + gamma.beta() * y <= gamma.product()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathMatrix {
    top: Vec<i64>,
    bottom: Vec<i64>,
}

impl PathMatrix {
    pub fn new(top: Vec<i64>, bottom: Vec<i64>) -> Result<Self> {
        if top.is_empty() || top.len() != bottom.len() {
            return Err(Error::InvalidMatrix(format!(
                "rows must be nonempty and of equal length ({} vs {})",
                top.len(),
                bottom.len()
            )));
        }
        if top.iter().chain(&bottom).any(|&e| e < 1) {
            return Err(Error::InvalidMatrix("entries must be positive".into()));
        }
        let m = Self { top, bottom };
        m.top_sum()
            .checked_add(m.bottom_sum())
            .ok_or_else(|| Error::InvalidMatrix("row sums overflow".into()))?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(top: Vec<i64>, bottom: Vec<i64>) -> Self {
        debug_assert!(Self::new(top.clone(), bottom.clone()).is_ok());
        Self { top, bottom }
    }

    pub fn top(&self) -> &[i64] {
        &self.top
    }

    pub fn bottom(&self) -> &[i64] {
        &self.bottom
    }

    pub fn columns(&self) -> usize {
        self.top.len()
    }

    fn top_sum(&self) -> i64 {
        self.top.iter().fold(0i64, |s, &e| s.saturating_add(e))
    }

    fn bottom_sum(&self) -> i64 {
        self.bottom.iter().fold(0i64, |s, &e| s.saturating_add(e))
    }

    /// The semigroup `<sum(top), sum(bottom)>`.
    pub fn gamma(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::new(self.top_sum(), self.bottom_sum())
    }

    /// Columns rotated left by `r`.
    pub fn rotated(&self, r: usize) -> Self {
        let n = self.columns();
        let r = r % n;
        let mut top = self.top.clone();
        let mut bottom = self.bottom.clone();
        top.rotate_left(r);
        bottom.rotate_left(r);
        Self { top, bottom }
    }

    /// Turning points of the path this exact column order describes, or
    /// `None` if it leaves the region below the diagonal.
    fn decode_exact(&self, gamma: NumericalSemigroup) -> Option<Vec<GapCoord>> {
        let (mut x, mut y) = (0, gamma.alpha());
        let mut points = Vec::with_capacity(self.columns() - 1);
        for (k, (&down, &right)) in self.top.iter().zip(&self.bottom).enumerate() {
            y -= down;
            x += right;
            if !below_diagonal(gamma, x, y) {
                return None;
            }
            if k + 1 < self.columns() {
                points.push(GapCoord::new(x, y));
            }
        }
        Some(points)
    }
}

impl fmt::Display for PathMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |v: &[i64]| {
            v.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({})/({})", row(&self.top), row(&self.bottom))
    }
}

pub fn lean_to_matrix(lean: &LeanSet) -> PathMatrix {
    let gamma = lean.gamma();
    let c = lean.coords();
    let n = c.len();
    if n == 0 {
        return PathMatrix::new_unchecked(vec![gamma.alpha()], vec![gamma.beta()]);
    }
    let mut top = Vec::with_capacity(n + 1);
    let mut bottom = Vec::with_capacity(n + 1);
    top.push(gamma.alpha() - c[n - 1].b);
    bottom.push(c[n - 1].a);
    for k in (1..n).rev() {
        top.push(c[k].b - c[k - 1].b);
        bottom.push(c[k - 1].a - c[k].a);
    }
    top.push(c[0].b);
    bottom.push(gamma.beta() - c[0].a);
    PathMatrix::new_unchecked(top, bottom)
}

/// Decodes a matrix to its lean set and the left rotation that had to be
/// applied to bring it below the diagonal.
pub fn matrix_to_lean(m: &PathMatrix) -> Result<(LeanSet, usize)> {
    let gamma = m.gamma()?;
    let mut found = None;
    let mut count = 0;
    for r in 0..m.columns() {
        if let Some(points) = m.rotated(r).decode_exact(gamma) {
            count += 1;
            found.get_or_insert((points, r));
        }
    }
    match (found, count) {
        (Some((mut points, r)), 1) => {
            points.reverse();
            Ok((LeanSet::from_coords(gamma, points)?, r))
        }
        _ => Err(Error::RotationNotUnique { count }),
    }
}

pub fn matrix_equiv(m1: &PathMatrix, m2: &PathMatrix) -> bool {
    m1.columns() == m2.columns() && (0..m1.columns()).any(|r| m1.rotated(r) == *m2)
}

pub fn lean_to_path(lean: &LeanSet) -> LatticePath {
    let m = lean_to_matrix(lean);
    let mut steps = Vec::with_capacity((lean.gamma().alpha() + lean.gamma().beta()) as usize);
    for (&down, &right) in m.top().iter().zip(m.bottom()) {
        steps.extend(std::iter::repeat_n(Step::Down, down as usize));
        steps.extend(std::iter::repeat_n(Step::Right, right as usize));
    }
    LatticePath {
        gamma: lean.gamma(),
        steps,
    }
}

pub fn path_to_lean(path: &LatticePath) -> Result<LeanSet> {
    let mut points = path.turning_points();
    points.reverse();
    LeanSet::from_coords(path.gamma(), points)
}

/// Run-length encoding of a path into its matrix.
pub fn path_to_matrix(path: &LatticePath) -> PathMatrix {
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for &s in path.steps() {
        match s {
            Step::Down if top.len() == bottom.len() => top.push(1),
            Step::Down => *top.last_mut().expect("pushed above") += 1,
            Step::Right if bottom.len() < top.len() => bottom.push(1),
            Step::Right => *bottom.last_mut().expect("run in progress") += 1,
        }
    }
    PathMatrix::new_unchecked(top, bottom)
}

/// Streams every class over `gamma` exactly once, in lexicographic order of
/// step words with `Down < Right`.
pub fn enumerate_classes(gamma: NumericalSemigroup) -> ClassIter {
    ClassIter {
        gamma,
        current: None,
        done: false,
    }
}

pub fn class_count(gamma: NumericalSemigroup) -> usize {
    enumerate_classes(gamma).count()
}

pub struct ClassIter {
    gamma: NumericalSemigroup,
    current: Option<Vec<Step>>,
    done: bool,
}

impl ClassIter {
    /// Lexicographically least word: all downs, then all rights.
    fn first(&self) -> Vec<Step> {
        let mut w = vec![Step::Down; self.gamma.alpha() as usize];
        w.extend(std::iter::repeat_n(Step::Right, self.gamma.beta() as usize));
        w
    }

    /// Successor of `w` among below-diagonal words, or `None` at the end.
    fn advance(&self, w: &mut [Step]) -> bool {
        let (alpha, beta) = (self.gamma.alpha(), self.gamma.beta());
        // Position reached before each step.
        let mut pos = Vec::with_capacity(w.len());
        let (mut x, mut y) = (0i64, alpha);
        for &s in w.iter() {
            pos.push((x, y));
            match s {
                Step::Down => y -= 1,
                Step::Right => x += 1,
            }
        }
        for i in (0..w.len()).rev() {
            if w[i] != Step::Down {
                continue;
            }
            let (x, y) = pos[i];
            if x < beta && below_diagonal(self.gamma, x + 1, y) {
                // Any down-first completion stays below the diagonal.
                w[i] = Step::Right;
                let downs_left = y as usize;
                let rights_left = (beta - x - 1) as usize;
                for (j, s) in w[i + 1..].iter_mut().enumerate() {
                    *s = if j < downs_left {
                        Step::Down
                    } else {
                        Step::Right
                    };
                }
                debug_assert_eq!(w.len() - i - 1, downs_left + rights_left);
                return true;
            }
        }
        false
    }
}

impl Iterator for ClassIter {
    type Item = LeanSet;

    fn next(&mut self) -> Option<LeanSet> {
        if self.done {
            return None;
        }
        let word = match self.current.take() {
            None => self.first(),
            Some(mut w) => {
                if !self.advance(&mut w) {
                    self.done = true;
                    return None;
                }
                w
            }
        };
        let path = LatticePath {
            gamma: self.gamma,
            steps: word,
        };
        let lean = path_to_lean(&path).expect("enumerated paths stay below the diagonal");
        self.current = Some(path.steps);
        Some(lean)
    }
}

/// ASCII picture of the path: lattice points are `.`, path vertices `+`,
/// turning points `*`, horizontal steps `-` and vertical steps `|`. The top
/// line is `y = alpha`.
pub fn render_ascii(path: &LatticePath) -> String {
    let gamma = path.gamma();
    let (alpha, beta) = (gamma.alpha() as usize, gamma.beta() as usize);
    let width = 2 * beta + 1;
    let height = 2 * alpha + 1;
    let mut grid = vec![vec![' '; width]; height];
    let row_of = |y: i64| 2 * (alpha - y as usize);
    for y in 0..=alpha {
        for x in 0..=beta {
            grid[2 * (alpha - y)][2 * x] = '.';
        }
    }
    let verts: Vec<(i64, i64)> = path.vertices().collect();
    for (w, step) in verts.windows(2).zip(path.steps()) {
        let (x, y) = w[0];
        let (r, c) = (row_of(y), 2 * x as usize);
        grid[r][c] = '+';
        match step {
            Step::Down => grid[r + 1][c] = '|',
            Step::Right => grid[r][c + 1] = '-',
        }
    }
    grid[row_of(0)][2 * beta] = '+';
    for p in path.turning_points() {
        grid[row_of(p.b)][2 * p.a as usize] = '*';
    }
    let mut out = String::new();
    for line in grid {
        out.push_str(line.into_iter().collect::<String>().trim_end());
        out.push('\n');
    }
    out
}

/// Standalone SVG drawing of the grid, the diagonal and the path.
pub fn render_svg(path: &LatticePath) -> String {
    let gamma = path.gamma();
    let (alpha, beta) = (gamma.alpha(), gamma.beta());
    let cell = 30;
    let pad = 15;
    let px = |x: i64| pad + x * cell;
    let py = |y: i64| pad + (alpha - y) * cell;
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\">\n",
        2 * pad + beta * cell,
        2 * pad + alpha * cell
    );
    for x in 0..=beta {
        s += &format!(
            "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#ccc\"/>\n",
            px(x),
            py(alpha),
            py(0)
        );
    }
    for y in 0..=alpha {
        s += &format!(
            "<line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\" stroke=\"#ccc\"/>\n",
            py(y),
            px(0),
            px(beta)
        );
    }
    s += &format!(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#888\"/>\n",
        px(0),
        py(alpha),
        px(beta),
        py(0)
    );
    let points: Vec<String> = path
        .vertices()
        .map(|(x, y)| format!("{},{}", px(x), py(y)))
        .collect();
    s += &format!(
        "<polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n",
        points.join(" ")
    );
    for p in path.turning_points() {
        s += &format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"black\"/>\n",
            px(p.a),
            py(p.b)
        );
    }
    s += "</svg>\n";
    s
}
