//! Output payloads. Each one serializes to the documented JSON schema and
//! also knows how to print itself as plain text and as TSV.

use std::fmt::Write;

use semimod::selfdual::CensusReport;
use semimod::{LeanSet, NumericalSemigroup, PathMatrix, Semimodule};
use serde::Serialize;

pub trait Render: Serialize {
    fn text(&self) -> String;
    fn tsv(&self) -> String;
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SemigroupJson {
    pub alpha: i64,
    pub beta: i64,
}

impl From<NumericalSemigroup> for SemigroupJson {
    fn from(g: NumericalSemigroup) -> Self {
        Self {
            alpha: g.alpha(),
            beta: g.beta(),
        }
    }
}

/// A class together with the translation that recovers the actual module.
#[derive(Debug, Clone, Serialize)]
pub struct ClassJson {
    pub lean: Vec<i64>,
    pub coords: Vec<[i64; 2]>,
    pub shift: i64,
}

impl ClassJson {
    pub fn new(lean: &LeanSet, shift: i64) -> Self {
        Self {
            lean: lean.gens().to_vec(),
            coords: lean.coords().iter().map(|c| [c.a, c.b]).collect(),
            shift,
        }
    }

    fn set(&self) -> String {
        format!("{{{}}}", join(&self.lean, ","))
    }
}

impl From<&Semimodule> for ClassJson {
    fn from(s: &Semimodule) -> Self {
        Self::new(&s.lean, s.shift)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixJson {
    pub top: Vec<i64>,
    pub bottom: Vec<i64>,
}

impl From<&PathMatrix> for MatrixJson {
    fn from(m: &PathMatrix) -> Self {
        Self {
            top: m.top().to_vec(),
            bottom: m.bottom().to_vec(),
        }
    }
}

impl MatrixJson {
    fn show(&self) -> String {
        format!("({})/({})", join(&self.top, ","), join(&self.bottom, ","))
    }
}

pub fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn coords_text(coords: &[[i64; 2]]) -> String {
    let parts: Vec<String> = coords
        .iter()
        .map(|[a, b]| format!("(a={a},b={b})"))
        .collect();
    parts.join(" ")
}

fn coords_tsv(coords: &[[i64; 2]]) -> String {
    let parts: Vec<String> = coords.iter().map(|[a, b]| format!("{a}:{b}")).collect();
    parts.join(",")
}

#[derive(Debug, Serialize)]
pub struct GapRow {
    pub gap: i64,
    pub a: i64,
    pub b: i64,
}

#[derive(Debug, Serialize)]
pub struct GapsReport {
    pub semigroup: SemigroupJson,
    pub frobenius: i64,
    pub gaps: Vec<GapRow>,
}

impl Render for GapsReport {
    fn text(&self) -> String {
        self.gaps
            .iter()
            .map(|g| format!("{} (a={},b={})\n", g.gap, g.a, g.b))
            .collect()
    }

    fn tsv(&self) -> String {
        let mut out = String::from("gap\ta\tb\n");
        for g in &self.gaps {
            let _ = writeln!(out, "{}\t{}\t{}", g.gap, g.a, g.b);
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct LeanReport {
    pub semigroup: SemigroupJson,
    pub input: Vec<i64>,
    #[serde(flatten)]
    pub class: ClassJson,
    pub matrix: MatrixJson,
}

impl Render for LeanReport {
    fn text(&self) -> String {
        format!(
            "lean {}\nshift {}\ncoords {}\nmatrix {}\n",
            self.class.set(),
            self.class.shift,
            coords_text(&self.class.coords),
            self.matrix.show()
        )
    }

    fn tsv(&self) -> String {
        format!(
            "lean\tshift\tcoords\ttop\tbottom\n{}\t{}\t{}\t{}\t{}\n",
            join(&self.class.lean, ","),
            self.class.shift,
            coords_tsv(&self.class.coords),
            join(&self.matrix.top, ","),
            join(&self.matrix.bottom, ",")
        )
    }
}

#[derive(Debug, Serialize)]
pub struct DualReport {
    pub semigroup: SemigroupJson,
    #[serde(flatten)]
    pub class: ClassJson,
    pub raw_generators: Vec<i64>,
    pub dual: ClassJson,
    pub selfdual: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula_matches_oracle: Option<bool>,
}

impl Render for DualReport {
    fn text(&self) -> String {
        let mut out = format!(
            "lean {}\nraw {}\ndual {} shift {}\nselfdual {}\n",
            self.class.set(),
            join(&self.raw_generators, ","),
            self.dual.set(),
            self.dual.shift,
            self.selfdual
        );
        if let Some(ok) = self.formula_matches_oracle {
            let _ = writeln!(out, "formula == oracle: {ok}");
        }
        out
    }

    fn tsv(&self) -> String {
        let check = self
            .formula_matches_oracle
            .map_or(String::new(), |b| b.to_string());
        format!(
            "lean\traw\tdual\tdual_shift\tselfdual\tcheck\n{}\t{}\t{}\t{}\t{}\t{}\n",
            join(&self.class.lean, ","),
            join(&self.raw_generators, ","),
            join(&self.dual.lean, ","),
            self.dual.shift,
            self.selfdual,
            check
        )
    }
}

#[derive(Debug, Serialize)]
pub struct SyzygyReport {
    pub semigroup: SemigroupJson,
    #[serde(flatten)]
    pub class: ClassJson,
    pub j: Vec<i64>,
    pub syzygy: ClassJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula_matches_oracle: Option<bool>,
}

impl Render for SyzygyReport {
    fn text(&self) -> String {
        let mut out = format!(
            "lean {}\nj {}\nsyzygy {} shift {}\n",
            self.class.set(),
            join(&self.j, ","),
            self.syzygy.set(),
            self.syzygy.shift
        );
        if let Some(ok) = self.formula_matches_oracle {
            let _ = writeln!(out, "formula == oracle: {ok}");
        }
        out
    }

    fn tsv(&self) -> String {
        let check = self
            .formula_matches_oracle
            .map_or(String::new(), |b| b.to_string());
        format!(
            "lean\tj\tsyzygy\tsyzygy_shift\tcheck\n{}\t{}\t{}\t{}\t{}\n",
            join(&self.class.lean, ","),
            join(&self.j, ","),
            join(&self.syzygy.lean, ","),
            self.syzygy.shift,
            check
        )
    }
}

#[derive(Debug, Serialize)]
pub struct MatrixReport {
    pub semigroup: SemigroupJson,
    #[serde(flatten)]
    pub class: ClassJson,
    pub matrix: MatrixJson,
    /// Left rotation applied to the input matrix to reach the canonical one.
    pub rotation: usize,
}

impl Render for MatrixReport {
    fn text(&self) -> String {
        format!(
            "matrix {}\nlean {}\ncoords {}\nrotation {}\n",
            self.matrix.show(),
            self.class.set(),
            coords_text(&self.class.coords),
            self.rotation
        )
    }

    fn tsv(&self) -> String {
        format!(
            "top\tbottom\tlean\trotation\n{}\t{}\t{}\t{}\n",
            join(&self.matrix.top, ","),
            join(&self.matrix.bottom, ","),
            join(&self.class.lean, ","),
            self.rotation
        )
    }
}

#[derive(Debug, Serialize)]
pub struct PathReport {
    pub semigroup: SemigroupJson,
    #[serde(flatten)]
    pub class: ClassJson,
    pub word: String,
    pub turning_points: Vec<[i64; 2]>,
    pub ascii: String,
}

impl Render for PathReport {
    fn text(&self) -> String {
        format!(
            "{}word {}\nturning points {}\n",
            self.ascii,
            self.word,
            coords_text(&self.turning_points)
        )
    }

    fn tsv(&self) -> String {
        format!(
            "lean\tword\tturning_points\n{}\t{}\t{}\n",
            join(&self.class.lean, ","),
            self.word,
            coords_tsv(&self.turning_points)
        )
    }
}

#[derive(Debug, Serialize)]
pub struct ResolutionReport {
    pub semigroup: SemigroupJson,
    #[serde(flatten)]
    pub class: ClassJson,
    pub period_shift: i64,
    pub steps: Vec<Vec<i64>>,
}

impl Render for ResolutionReport {
    fn text(&self) -> String {
        let mut out = format!(
            "lean {}\nperiod shift {}\n",
            self.class.set(),
            self.period_shift
        );
        for (s, degs) in self.steps.iter().enumerate() {
            let _ = writeln!(out, "F{s}: {}", join(degs, " "));
        }
        out
    }

    fn tsv(&self) -> String {
        let mut out = String::from("step\tdegrees\n");
        for (s, degs) in self.steps.iter().enumerate() {
            let _ = writeln!(out, "{s}\t{}", join(degs, ","));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct CensusRowJson {
    pub generator_count: usize,
    pub observed: u64,
    pub expected: u64,
}

#[derive(Debug, Serialize)]
pub struct CensusJson {
    pub semigroup: SemigroupJson,
    pub classes: u64,
    pub rows: Vec<CensusRowJson>,
    pub total_observed: u64,
    pub total_expected: u64,
    pub ok: bool,
}

impl From<&CensusReport> for CensusJson {
    fn from(r: &CensusReport) -> Self {
        Self {
            semigroup: r.gamma.into(),
            classes: r.classes,
            rows: r
                .rows
                .iter()
                .map(|row| CensusRowJson {
                    generator_count: row.generator_count,
                    observed: row.observed,
                    expected: row.expected,
                })
                .collect(),
            total_observed: r.total_observed,
            total_expected: r.total_expected,
            ok: r.matches(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CensusList {
    pub census: Vec<CensusJson>,
    pub ok: bool,
}

impl Render for CensusList {
    fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.census {
            let _ = writeln!(
                out,
                "<{},{}> classes {}",
                c.semigroup.alpha, c.semigroup.beta, c.classes
            );
            let _ = writeln!(out, "generators\tobserved\texpected");
            for row in &c.rows {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}",
                    row.generator_count, row.observed, row.expected
                );
            }
            let _ = writeln!(out, "total\t{}\t{}", c.total_observed, c.total_expected);
        }
        out.push_str(if self.ok { "OK\n" } else { "MISMATCH\n" });
        out
    }

    fn tsv(&self) -> String {
        let mut out = String::from("alpha\tbeta\tgenerator_count\tobserved\texpected\n");
        for c in &self.census {
            for row in &c.rows {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    c.semigroup.alpha,
                    c.semigroup.beta,
                    row.generator_count,
                    row.observed,
                    row.expected
                );
            }
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct OrbitEntryJson {
    pub element: String,
    pub lean: Vec<i64>,
}

#[derive(Debug, Serialize)]
pub struct OrbitReport {
    pub semigroup: SemigroupJson,
    #[serde(flatten)]
    pub class: ClassJson,
    pub orbit: Vec<OrbitEntryJson>,
}

impl Render for OrbitReport {
    fn text(&self) -> String {
        self.orbit
            .iter()
            .map(|e| format!("{}\t{{{}}}\n", e.element, join(&e.lean, ",")))
            .collect()
    }

    fn tsv(&self) -> String {
        let mut out = String::from("element\tlean\n");
        for e in &self.orbit {
            let _ = writeln!(out, "{}\t{}", e.element, join(&e.lean, ","));
        }
        out
    }
}
