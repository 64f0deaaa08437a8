//! End-to-end acceptance criteria. Each criterion prints one line with its
//! verdict and wall time; the process exits nonzero if any of them fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{brute_member, coprime_pairs, rational_catalan, window};
use semimod::selfdual::{expected_counts, observed_counts};
use semimod::*;

type Outcome = std::result::Result<(), String>;
type Check = fn() -> Outcome;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g(alpha: i64, beta: i64) -> NumericalSemigroup {
    NumericalSemigroup::new(alpha, beta).unwrap()
}

fn worked_example() -> Outcome {
    let gamma = g(5, 7);
    let (lean, _) = normalize(gamma, &[0, 9, 6, 8]).map_err(|e| e.to_string())?;
    let m = lean_to_matrix(&lean);
    ensure(
        m.top() == [2, 1, 1, 1] && m.bottom() == [1, 2, 1, 3],
        || format!("matrix {m}"),
    )?;
    let mut pts: Vec<(i64, i64)> = lean_to_path(&lean)
        .turning_points()
        .iter()
        .map(|c| (c.a, c.b))
        .collect();
    pts.sort_unstable();
    ensure(pts == [(1, 3), (3, 2), (4, 1)], || {
        format!("turning points {pts:?}")
    })?;
    let raw = dual(&lean).raw_generators;
    ensure(raw == [20, 22, 19, 21], || format!("dual raw {raw:?}"))?;
    let j = syzygy_generators(&lean).map_err(|e| e.to_string())?.j;
    ensure(j == [15, 13, 16, 14], || format!("J {j:?}"))?;
    let mirrored: Vec<i64> = j.iter().map(|x| 35 - x).collect();
    ensure(mirrored == raw, || {
        "x -> 35 - x does not map J to the dual".into()
    })
}

fn duality_oracle() -> Outcome {
    for gamma in coprime_pairs(16) {
        for lean in enumerate_classes(gamma) {
            let delta: Semimodule = lean.clone().into();
            let formula = dual(&lean).semimodule();
            ensure(formula == dual_oracle(&delta), || {
                format!("{gamma} {lean}: oracle differs")
            })?;
            // Independent check on a window: c is in the dual iff c + I lies in Gamma.
            let ab = gamma.product();
            for c in -ab..2 * ab {
                let brute = lean
                    .gens()
                    .iter()
                    .all(|&i| brute_member(gamma, &[0], c + i));
                ensure(formula.contains(c) == brute, || {
                    format!("{gamma} {lean}: c = {c}")
                })?;
            }
            let back = dual_semimodule(&formula);
            ensure(back.lean == lean && back.shift == 0, || {
                format!("{gamma} {lean}: double dual {back}")
            })?;
        }
    }
    Ok(())
}

fn census_theorems() -> Outcome {
    for beta in 3..=13 {
        for alpha in 2..beta {
            let Ok(gamma) = NumericalSemigroup::new(alpha, beta) else {
                continue;
            };
            let report = census(gamma);
            let closed = common::binom((alpha / 2 + beta / 2) as u64, (alpha / 2) as u64);
            ensure(
                report.total_observed == closed && report.total_expected == closed,
                || {
                    format!(
                        "{gamma}: total {}, expected {closed}",
                        report.total_observed
                    )
                },
            )?;
            ensure(report.matches(), || {
                format!("{gamma}: rows {:?}", report.rows)
            })?;
            let (_, observed) = observed_counts(gamma);
            let expected: std::collections::BTreeMap<usize, u64> = expected_counts(gamma);
            ensure(observed == expected, || {
                format!("{gamma}: observed {observed:?}, expected {expected:?}")
            })?;
        }
    }
    let table = |a, b| observed_counts(g(a, b)).1.into_iter().collect::<Vec<_>>();
    ensure(table(5, 7) == [(1, 1), (3, 6), (5, 3)], || {
        "<5,7> table".into()
    })?;
    ensure(table(4, 7) == [(1, 1), (2, 3), (3, 3), (4, 3)], || {
        "<4,7> table".into()
    })
}

fn class_counts() -> Outcome {
    let n = enumerate_classes(g(5, 7)).count();
    ensure(n == 66, || format!("<5,7> has {n} classes"))?;
    for gamma in coprime_pairs(18) {
        let classes: BTreeSet<Vec<i64>> = enumerate_classes(gamma)
            .map(|l| l.gens().to_vec())
            .collect();
        ensure(classes.len() as u64 == rational_catalan(gamma), || {
            format!("{gamma}: {} classes", classes.len())
        })?;
    }
    Ok(())
}

fn syzygy_consistency() -> Outcome {
    for gamma in coprime_pairs(16) {
        for lean in enumerate_classes(gamma).filter(|l| l.len() >= 2) {
            let oracle = syzygy_oracle(&lean).map_err(|e| e.to_string())?;
            let j = syzygy_generators(&lean).map_err(|e| e.to_string())?.j;
            let closed = Semimodule::generated_by(gamma, &j).map_err(|e| e.to_string())?;
            ensure(oracle == closed, || {
                format!("{gamma} {lean}: oracle {oracle}, J {closed}")
            })?;
            let (shifted, _) = matrix_to_lean(&syzygy_matrix(&lean_to_matrix(&lean)))
                .map_err(|e| e.to_string())?;
            ensure(shifted == oracle.lean, || {
                format!("{gamma} {lean}: matrix rule {shifted}")
            })?;
            // Set level: elements with two presentations i + gamma.
            let top = lean.max_gen() + gamma.conductor() + gamma.alpha();
            let brute: Vec<i64> = (0..top)
                .filter(|&x| {
                    lean.gens()
                        .iter()
                        .filter(|&&i| brute_member(gamma, &[i], x))
                        .count()
                        >= 2
                })
                .collect();
            ensure(window(&oracle, 0, top) == brute, || {
                format!("{gamma} {lean}: set level")
            })?;
        }
    }
    Ok(())
}

fn dihedral_relations() -> Outcome {
    for gamma in [g(4, 5), g(5, 7), g(5, 8)] {
        for m in 3..=gamma.alpha() as usize {
            let report = dihedral_check(enumerate_classes(gamma), m).map_err(|e| e.to_string())?;
            if let Some(bad) = report.classes.iter().find(|c| !c.passed()) {
                return Err(format!("{gamma} m={m}: {bad:?}"));
            }
        }
    }
    Ok(())
}

fn resolution_structure() -> Outcome {
    let gamma = g(5, 7);
    for lean in enumerate_classes(gamma).filter(|l| l.len() >= 2) {
        let j = syzygy_generators(&lean).map_err(|e| e.to_string())?.j;
        let r = resolution_degrees(&lean, 8).map_err(|e| e.to_string())?;
        let a1alpha = lean.coords()[0].a * gamma.alpha();
        ensure(r.steps[0] == lean.gens() && r.steps[1] == j, || {
            format!("{lean}: first steps")
        })?;
        ensure(r.period_shift == a1alpha, || {
            format!("{lean}: shift {}", r.period_shift)
        })?;
        for s in 0..r.steps.len() - 2 {
            let next: Vec<i64> = r.steps[s].iter().map(|d| d + a1alpha).collect();
            ensure(r.steps[s + 2] == next, || format!("{lean}: step {}", s + 2))?;
            ensure(r.steps[s].len() == lean.len(), || {
                format!("{lean}: size at {s}")
            })?;
        }
        let hat = hat_semimodule(&lean).map_err(|e| e.to_string())?;
        let target = Semimodule::from(lean.clone()).shifted(a1alpha);
        let d = dual_oracle(&hat);
        let (lo, hi) = (-2 * gamma.product(), 3 * gamma.product());
        ensure(window(&d, lo, hi) == window(&target, lo, hi), || {
            format!("{lean}: hat dual")
        })?;
    }
    Ok(())
}

fn parity_bijections() -> Outcome {
    let pairs = [
        (
            g(4, 7),
            ParityDirection::AlphaUp,
            ParityDirection::AlphaDown,
        ),
        (g(3, 4), ParityDirection::BetaUp, ParityDirection::BetaDown),
    ];
    for (source, up, down) in pairs {
        let target = up.target(source).map_err(|e| e.to_string())?;
        let selfdual = |gamma| -> BTreeSet<Vec<i64>> {
            enumerate_classes(gamma)
                .filter(is_selfdual)
                .map(|l| l.gens().to_vec())
                .collect()
        };
        let (src, dst) = (selfdual(source), selfdual(target));
        let mut image = BTreeSet::new();
        for gens in &src {
            let m = lean_to_matrix(&LeanSet::new(source, gens.clone()).unwrap());
            let f = parity_bijection(&m, up).map_err(|e| e.to_string())?;
            let back = parity_bijection(&f, down).map_err(|e| e.to_string())?;
            ensure(matrix_equiv(&back, &m), || {
                format!("{source}: f^-1 f differs on {m}")
            })?;
            image.insert(
                matrix_to_lean(&f)
                    .map_err(|e| e.to_string())?
                    .0
                    .gens()
                    .to_vec(),
            );
        }
        ensure(image == dst, || {
            format!("{source} -> {target}: image is not all selfdual classes")
        })?;
        for gens in &dst {
            let m = lean_to_matrix(&LeanSet::new(target, gens.clone()).unwrap());
            let b = parity_bijection(&m, down).map_err(|e| e.to_string())?;
            let again = parity_bijection(&b, up).map_err(|e| e.to_string())?;
            ensure(matrix_equiv(&again, &m), || {
                format!("{target}: f f^-1 differs on {m}")
            })?;
            let (lean, _) = matrix_to_lean(&b).map_err(|e| e.to_string())?;
            ensure(src.contains(lean.gens()), || {
                format!("{target}: preimage {lean} not selfdual")
            })?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, Check, Duration); 8] = [
        (
            "worked example <5,7> {0,9,6,8}",
            worked_example,
            Duration::from_millis(1),
        ),
        (
            "dual formula = oracle, double dual, a+b <= 16",
            duality_oracle,
            Duration::from_secs(30),
        ),
        (
            "selfdual census tables, 2 <= a < b <= 13",
            census_theorems,
            Duration::from_secs(60),
        ),
        (
            "class counts = rational Catalan, a+b <= 18",
            class_counts,
            Duration::from_secs(30),
        ),
        (
            "syzygy oracle = J = matrix shift, a+b <= 16",
            syzygy_consistency,
            Duration::from_secs(30),
        ),
        (
            "dihedral relations on <4,5>, <5,7>, <5,8>",
            dihedral_relations,
            Duration::from_secs(10),
        ),
        (
            "resolution period and hat dual on <5,7>",
            resolution_structure,
            Duration::from_secs(10),
        ),
        (
            "parity bijections (4,7)<->(5,7), (3,4)<->(3,5)",
            parity_bijections,
            Duration::from_secs(5),
        ),
    ];
    let mut failed = 0;
    for (k, (name, check, bound)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let verdict = match &outcome {
            Ok(()) if elapsed <= *bound => "PASS".to_string(),
            Ok(()) => format!("FAIL (took {elapsed:?}, bound {bound:?})"),
            Err(msg) => format!("FAIL ({msg})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("AC{} {name}: {verdict} [{elapsed:.2?}]", k + 1);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
