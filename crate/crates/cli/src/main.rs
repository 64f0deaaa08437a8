//! `semimod`: command-line front end for semimodules over `<alpha, beta>`.
//!
//! Exit codes: 0 success, 2 invalid input, 3 internal consistency failure,
//! 4 census mismatch. Payloads go to stdout, diagnostics to stderr.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semimod::parse::{parse_generators, parse_matrix, parse_path};
use semimod::pathmatrix::{render_ascii, render_svg};
use semimod::selfdual::census;
use semimod::syzygy::dihedral_orbit;
use semimod::{
    dual, dual_oracle, lean_to_matrix, lean_to_path, matrix_to_lean, normalize, path_to_lean,
    resolution_degrees, syzygy, syzygy_generators, syzygy_matrix, syzygy_oracle, LeanSet,
    NumericalSemigroup, Semimodule,
};

use report::*;

#[derive(Parser)]
#[command(name = "semimod", version, about = "Semimodules over <alpha, beta>")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Cross-check closed formulas against brute-force oracles.
    #[arg(long, global = true)]
    check: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Args)]
struct Pair {
    alpha: i64,
    beta: i64,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct ClassArgs {
    alpha: i64,
    beta: i64,
    /// Generators, in any order: `0 9 6 8` or `"{0,9,6,8}"`.
    #[arg(required = true)]
    gens: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// List the gaps with their (a, b) coordinates.
    Gaps(Pair),
    /// Normalize a generator list to its lean set.
    Lean(ClassArgs),
    /// Dual of a class.
    Dual(ClassArgs),
    /// Syzygy of a class.
    Syzygy(ClassArgs),
    /// Path matrix of a class, or decode a matrix with --decode.
    #[command(allow_negative_numbers = true)]
    Matrix {
        alpha: Option<i64>,
        beta: Option<i64>,
        gens: Vec<String>,
        /// Matrix such as `2,1,1,1/1,2,1,3`.
        #[arg(long, conflicts_with = "gens")]
        decode: Option<String>,
    },
    /// Draw the lattice path of a class, or decode a word with --word.
    #[command(allow_negative_numbers = true)]
    Path {
        alpha: i64,
        beta: i64,
        gens: Vec<String>,
        /// Step word over D and R.
        #[arg(long, conflicts_with = "gens")]
        word: Option<String>,
        /// Also write an SVG drawing to this file.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Degrees of the minimal graded free resolution.
    Resolution {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, default_value_t = 4)]
        steps: usize,
    },
    /// Count selfdual classes and compare with the closed forms.
    Census {
        alpha: Option<i64>,
        beta: Option<i64>,
        /// Every coprime pair with alpha + beta <= --max-sum.
        #[arg(long, requires = "max_sum", conflicts_with_all = ["alpha", "beta"])]
        all: bool,
        #[arg(long)]
        max_sum: Option<i64>,
    },
    /// Orbit of a class under Syz and the dual.
    Orbit(ClassArgs),
}

enum Failure {
    Invalid(String),
    Inconsistent(String),
    CensusMismatch,
}

impl From<semimod::Error> for Failure {
    fn from(e: semimod::Error) -> Self {
        match e {
            semimod::Error::RotationNotUnique { .. } => Failure::Inconsistent(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn emit<R: Render>(r: &R, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("payloads serialize");
            s.push('\n');
            s
        }
        Format::Tsv => r.tsv(),
        Format::Text => r.text(),
    }
}

fn gamma(alpha: i64, beta: i64) -> Result<NumericalSemigroup, Failure> {
    Ok(NumericalSemigroup::new(alpha, beta)?)
}

fn read_class(args: &ClassArgs) -> Result<(LeanSet, i64, Vec<i64>), Failure> {
    let g = gamma(args.alpha, args.beta)?;
    let input = parse_generators(&args.gens.join(" "))?;
    let (lean, shift) = normalize(g, &input)?;
    Ok((lean, shift, input))
}

fn inconsistent(what: &str, lean: &LeanSet) -> Failure {
    Failure::Inconsistent(format!("{what} disagree on {lean}"))
}

fn cmd_gaps(p: &Pair, format: Format) -> Outcome {
    let g = gamma(p.alpha, p.beta)?;
    let gaps = g
        .gaps()
        .into_iter()
        .map(|gap| {
            let c = g.gap_coords(gap).expect("gaps have coordinates");
            GapRow {
                gap,
                a: c.a,
                b: c.b,
            }
        })
        .collect();
    Ok(emit(
        &GapsReport {
            semigroup: g.into(),
            frobenius: g.frobenius(),
            gaps,
        },
        format,
    ))
}

fn cmd_lean(args: &ClassArgs, format: Format) -> Outcome {
    let (lean, shift, input) = read_class(args)?;
    Ok(emit(
        &LeanReport {
            semigroup: lean.gamma().into(),
            input,
            class: ClassJson::new(&lean, shift),
            matrix: (&lean_to_matrix(&lean)).into(),
        },
        format,
    ))
}

fn cmd_dual(args: &ClassArgs, check: bool, format: Format) -> Outcome {
    let (lean, shift, _) = read_class(args)?;
    let d = dual(&lean);
    let formula = d.semimodule().shifted(-shift);
    let formula_matches_oracle = check.then(|| {
        let delta = Semimodule::new(lean.clone(), shift);
        dual_oracle(&delta) == formula
    });
    if formula_matches_oracle == Some(false) {
        return Err(inconsistent("dual formula and oracle", &lean));
    }
    Ok(emit(
        &DualReport {
            semigroup: lean.gamma().into(),
            class: ClassJson::new(&lean, shift),
            raw_generators: d.raw_generators,
            dual: (&formula).into(),
            selfdual: d.class == lean,
            formula_matches_oracle,
        },
        format,
    ))
}

fn cmd_syzygy(args: &ClassArgs, check: bool, format: Format) -> Outcome {
    let (lean, shift, _) = read_class(args)?;
    let j = syzygy_generators(&lean).map(|fc| fc.j).unwrap_or_default();
    let syz = syzygy(&lean);
    let formula_matches_oracle = (check && lean.len() >= 2).then(|| {
        let by_matrix = matrix_to_lean(&syzygy_matrix(&lean_to_matrix(&lean)))
            .map(|(l, _)| l == syz.lean)
            .unwrap_or(false);
        syzygy_oracle(&lean).map(|o| o == syz).unwrap_or(false) && by_matrix
    });
    if formula_matches_oracle == Some(false) {
        return Err(inconsistent(
            "syzygy formula, oracle and matrix rule",
            &lean,
        ));
    }
    Ok(emit(
        &SyzygyReport {
            semigroup: lean.gamma().into(),
            class: ClassJson::new(&lean, shift),
            j: j.iter().map(|x| x + shift).collect(),
            syzygy: (&syz.shifted(shift)).into(),
            formula_matches_oracle,
        },
        format,
    ))
}

fn cmd_matrix(
    alpha: Option<i64>,
    beta: Option<i64>,
    gens: &[String],
    decode: Option<&str>,
    check: bool,
    format: Format,
) -> Outcome {
    let (lean, shift, matrix, rotation) = match decode {
        Some(text) => {
            let m = parse_matrix(text)?;
            let (lean, rotation) = matrix_to_lean(&m)?;
            if let (Some(a), Some(b)) = (alpha, beta) {
                if (a, b) != (lean.gamma().alpha(), lean.gamma().beta()) {
                    return Err(Failure::Invalid(format!(
                        "matrix rows sum to {}, not <{a},{b}>",
                        lean.gamma()
                    )));
                }
            }
            (lean, 0, m, rotation)
        }
        None => {
            let (Some(alpha), Some(beta)) = (alpha, beta) else {
                return Err(Failure::Invalid(
                    "give ALPHA BETA GENS... or --decode MATRIX".into(),
                ));
            };
            let args = ClassArgs {
                alpha,
                beta,
                gens: gens.to_vec(),
            };
            if gens.is_empty() {
                return Err(Failure::Invalid("no generators given".into()));
            }
            let (lean, shift, _) = read_class(&args)?;
            let m = lean_to_matrix(&lean);
            (lean, shift, m, 0)
        }
    };
    if check && lean_to_matrix(&lean) != matrix.rotated(rotation) {
        return Err(inconsistent("matrix encoding and decoding", &lean));
    }
    Ok(emit(
        &MatrixReport {
            semigroup: lean.gamma().into(),
            class: ClassJson::new(&lean, shift),
            matrix: (&matrix).into(),
            rotation,
        },
        format,
    ))
}

fn cmd_path(
    alpha: i64,
    beta: i64,
    gens: &[String],
    word: Option<&str>,
    svg: Option<&PathBuf>,
    format: Format,
) -> Outcome {
    let g = gamma(alpha, beta)?;
    let (lean, shift, path) = match word {
        Some(w) => {
            let path = parse_path(g, w)?;
            (path_to_lean(&path)?, 0, path)
        }
        None => {
            if gens.is_empty() {
                return Err(Failure::Invalid("give GENS... or --word WORD".into()));
            }
            let (lean, shift) = normalize(g, &parse_generators(&gens.join(" "))?)?;
            let path = lean_to_path(&lean);
            (lean, shift, path)
        }
    };
    if let Some(file) = svg {
        std::fs::write(file, render_svg(&path))
            .map_err(|e| Failure::Invalid(format!("{}: {e}", file.display())))?;
    }
    Ok(emit(
        &PathReport {
            semigroup: g.into(),
            class: ClassJson::new(&lean, shift),
            word: path.word(),
            turning_points: path.turning_points().iter().map(|c| [c.a, c.b]).collect(),
            ascii: render_ascii(&path),
        },
        format,
    ))
}

fn cmd_resolution(args: &ClassArgs, steps: usize, format: Format) -> Outcome {
    let (lean, shift, _) = read_class(args)?;
    let r = resolution_degrees(&lean, steps)?;
    Ok(emit(
        &ResolutionReport {
            semigroup: lean.gamma().into(),
            class: ClassJson::new(&lean, shift),
            period_shift: r.period_shift,
            steps: r
                .steps
                .iter()
                .map(|s| s.iter().map(|d| d + shift).collect())
                .collect(),
        },
        format,
    ))
}

fn cmd_census(
    alpha: Option<i64>,
    beta: Option<i64>,
    all: bool,
    max_sum: Option<i64>,
    format: Format,
) -> Result<(String, bool), Failure> {
    let pairs = match (all, alpha, beta) {
        (true, _, _) => {
            let n = max_sum.expect("clap requires --max-sum with --all");
            let mut pairs = Vec::new();
            for a in 2..n {
                for b in a + 1..=n - a {
                    if let Ok(g) = NumericalSemigroup::new(a, b) {
                        pairs.push(g);
                    }
                }
            }
            pairs
        }
        (false, Some(a), Some(b)) => vec![gamma(a, b)?],
        _ => {
            return Err(Failure::Invalid(
                "give ALPHA BETA or --all --max-sum N".into(),
            ))
        }
    };
    let census: Vec<CensusJson> = pairs.into_iter().map(|g| (&census(g)).into()).collect();
    let ok = census.iter().all(|c| c.ok);
    Ok((emit(&CensusList { census, ok }, format), ok))
}

fn cmd_orbit(args: &ClassArgs, format: Format) -> Outcome {
    let (lean, shift, _) = read_class(args)?;
    let orbit = dihedral_orbit(&lean)?
        .into_iter()
        .map(|e| OrbitEntryJson {
            element: e.element.label(),
            lean: e.lean.gens().to_vec(),
        })
        .collect();
    Ok(emit(
        &OrbitReport {
            semigroup: lean.gamma().into(),
            class: ClassJson::new(&lean, shift),
            orbit,
        },
        format,
    ))
}

fn run(cli: &Cli) -> Outcome {
    let (fmt, check) = (cli.format, cli.check);
    match &cli.command {
        Command::Gaps(p) => cmd_gaps(p, fmt),
        Command::Lean(c) => cmd_lean(c, fmt),
        Command::Dual(c) => cmd_dual(c, check, fmt),
        Command::Syzygy(c) => cmd_syzygy(c, check, fmt),
        Command::Matrix {
            alpha,
            beta,
            gens,
            decode,
        } => cmd_matrix(*alpha, *beta, gens, decode.as_deref(), check, fmt),
        Command::Path {
            alpha,
            beta,
            gens,
            word,
            svg,
        } => cmd_path(*alpha, *beta, gens, word.as_deref(), svg.as_ref(), fmt),
        Command::Resolution { class, steps } => cmd_resolution(class, *steps, fmt),
        Command::Census {
            alpha,
            beta,
            all,
            max_sum,
        } => {
            let (out, ok) = cmd_census(*alpha, *beta, *all, *max_sum, fmt)?;
            print!("{out}");
            if ok {
                Ok(String::new())
            } else {
                Err(Failure::CensusMismatch)
            }
        }
        Command::Orbit(c) => cmd_orbit(c, fmt),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Inconsistent(msg)) => {
            eprintln!("internal consistency failure: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::CensusMismatch) => {
            eprintln!("census mismatch");
            ExitCode::from(4)
        }
    }
}
