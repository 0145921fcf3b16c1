//! Per-trial suite execution.
//!
//! A generated trial `t` draws, from `SplitMix64::for_trial(seed, t)` and in
//! this order: the size `n`, the Hermitian matrix `A`, a constructed
//! interlacing pair of degree `n`, and the identity's α. All draws happen
//! whatever the mode, so a seed names the same instance in every mode.

use std::path::PathBuf;
use std::time::Instant;

use interlace::interlace::DEFAULT_ALPHA_SEED;
use interlace::random::{random_hermitian, random_interlacing_pair, SplitMix64};
use interlace::{
    bordered_identity, cauchy_check_with_width, char_poly, default_alphas, hko_crosscheck, interlaces_exact,
    principal_submatrix, HermitianMatrix, Polynomial, Rational, Verdict,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{Instance, PolynomialPair};
use crate::report::{CheckRecord, Report, Summary, TrialRecord};
use crate::{Mode, RunConfig};

struct Generated {
    matrix: HermitianMatrix,
    pair: PolynomialPair,
    alpha: Rational,
}

fn generate(config: &RunConfig, trial: u64) -> (Generated, u64) {
    let trial_seed = SplitMix64::new(config.seed ^ trial).next_u64();
    let mut rng = SplitMix64::new(trial_seed);
    let n = rng.usize_in(config.size_min, config.size_max);
    let matrix = random_hermitian(&mut rng, n, config.entry_bound);
    let (f, g, _) = random_interlacing_pair(&mut rng, n.max(1), config.entry_bound);
    let alpha = rng.rational(100);
    (
        Generated {
            matrix,
            pair: PolynomialPair { f, g },
            alpha,
        },
        trial_seed,
    )
}

/// The matrix of generated trial `trial`, as written by `gen`.
pub fn generated_matrix(config: &RunConfig, trial: u64) -> HermitianMatrix {
    generate(config, trial).0.matrix
}

pub(crate) fn run(config: &RunConfig, inputs: Option<Vec<(PathBuf, Instance)>>) -> Report {
    let start = Instant::now();
    let alphas = default_alphas(DEFAULT_ALPHA_SEED, config.alpha_count);
    let count = inputs.as_ref().map_or(config.trials, Vec::len);
    let trials: Vec<TrialRecord> = (0..count)
        .into_par_iter()
        .map(|t| {
            let t0 = Instant::now();
            let (generated, seed) = generate(config, t as u64);
            let (source, instance) = match &inputs {
                Some(list) => (list[t].0.display().to_string(), Some(&list[t].1)),
                None => ("generated".to_string(), None),
            };
            let checks: Vec<CheckRecord> = config
                .mode
                .suites()
                .iter()
                .filter_map(|suite| run_suite(*suite, config, &alphas, &generated, instance))
                .collect();
            TrialRecord {
                index: t,
                source,
                seed,
                passed: checks.iter().all(|c| c.passed),
                checks,
                elapsed_us: t0.elapsed().as_micros(),
            }
        })
        .collect();

    let mut summary = Summary {
        trials: trials.len(),
        ..Default::default()
    };
    for c in trials.iter().flat_map(|t| &t.checks) {
        summary.checks += 1;
        if c.passed {
            summary.passed += 1;
        } else {
            summary.failed += 1;
        }
    }
    Report {
        tool: "interlace",
        version: env!("CARGO_PKG_VERSION"),
        config: config.clone(),
        trials,
        summary,
        elapsed_us: start.elapsed().as_micros(),
    }
}

fn record(suite: Mode, outcome: interlace::Result<(bool, Value)>) -> CheckRecord {
    match outcome {
        Ok((passed, details)) => CheckRecord {
            suite,
            passed,
            error: None,
            details,
        },
        Err(e) => CheckRecord {
            suite,
            passed: false,
            error: Some(e.to_string()),
            details: Value::Null,
        },
    }
}

/// `det(xI - A)` and `det(xI - B)` for the leading block `B`.
fn matrix_pair(a: &HermitianMatrix) -> interlace::Result<(Polynomial, Polynomial)> {
    let b = principal_submatrix(a, a.n() - 1)?;
    Ok((char_poly(a)?, char_poly(&b)?))
}

fn run_suite(
    suite: Mode,
    config: &RunConfig,
    alphas: &[Rational],
    gen: &Generated,
    input: Option<&Instance>,
) -> Option<CheckRecord> {
    let matrix = match input {
        None => Some(&gen.matrix),
        Some(Instance::Matrix(m)) => Some(m),
        Some(Instance::Pair(_)) => None,
    };
    let outcome = match suite {
        Mode::Definition => {
            let (pair, expect_interlacing) = match input {
                Some(Instance::Pair(p)) => (Ok(p.clone()), false),
                Some(Instance::Matrix(m)) => (matrix_pair(m).map(|(f, g)| PolynomialPair { f, g }), true),
                None => (Ok(gen.pair.clone()), true),
            };
            pair.and_then(|p| definition_check(&p, expect_interlacing))
        }
        Mode::Pencil => {
            let (pair, from_matrix) = match input {
                Some(Instance::Pair(p)) => (Ok(p.clone()), false),
                _ => (matrix_pair(matrix?).map(|(f, g)| PolynomialPair { f, g }), true),
            };
            pair.and_then(|p| {
                let r = hko_crosscheck(&p.f, &p.g, alphas)?;
                // for a Hermitian pencil the theorem also forces every member real-rooted
                let passed = r.consistency.is_consistent() && (!from_matrix || r.pencil.all_real);
                Ok((passed, json!({ "f": p.f, "g": p.g, "report": r })))
            })
        }
        Mode::Identity => {
            let m = matrix?;
            bordered_identity(m, &gen.alpha).map(|r| (r.exact_match, json!({ "matrix": m, "report": r })))
        }
        Mode::Cauchy => {
            let m = matrix?;
            (0..m.n())
                .map(|k| cauchy_check_with_width(m, k, &config.width))
                .collect::<interlace::Result<Vec<_>>>()
                .map(|rs| {
                    let passed = rs.iter().all(|r| r.holds());
                    (passed, json!({ "matrix": m, "reports": rs }))
                })
        }
        Mode::All => unreachable!("expanded by Mode::suites"),
    };
    Some(record(suite, outcome))
}

/// Decides interlacing and checks the verdict survives a shift of both
/// polynomials; for matrix-derived and constructed pairs it must be `Interlaces`.
fn definition_check(p: &PolynomialPair, expect_interlacing: bool) -> interlace::Result<(bool, Value)> {
    let r = interlaces_exact(&p.f, &p.g)?;
    let t = Rational::new(7.into(), 3.into());
    let shifted = interlaces_exact(&p.f.shift(&t), &p.g.shift(&t))?;
    let passed = shifted.verdict == r.verdict && (!expect_interlacing || r.verdict == Verdict::Interlaces);
    Ok((passed, json!({ "f": p.f, "g": p.g, "report": r })))
}
