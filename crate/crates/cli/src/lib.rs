//! Instance generation and suite execution behind the `interlace` binary.
//!
//! Exit codes: `0` every check passed, `1` some property was violated,
//! `2` bad configuration or input.

use std::path::{Path, PathBuf};

use thiserror::Error;

pub mod config;
pub mod input;
pub mod report;
pub mod suite;

pub use config::{Mode, RunConfig};
pub use input::Instance;
pub use report::{strip_timing, Report};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_INPUT
    }

    fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }
}

/// Writes generated Hermitian matrices as JSON.
///
/// With one trial `out` is the file written; otherwise `out` is a directory
/// receiving `matrix_0000.json`, `matrix_0001.json`, ... Returns the paths
/// written.
pub fn cmd_gen(config: &RunConfig, out: &Path) -> Result<Vec<PathBuf>, CliError> {
    config.validate()?;
    let matrices = (0..config.trials).map(|t| suite::generated_matrix(config, t as u64));
    let mut written = Vec::new();
    if config.trials == 1 {
        write_file(out, &matrices.into_iter().next().unwrap().to_json())?;
        written.push(out.to_path_buf());
    } else {
        std::fs::create_dir_all(out).map_err(|e| CliError::io(out, e))?;
        for (t, m) in matrices.enumerate() {
            let path = out.join(format!("matrix_{t:04}.json"));
            write_file(&path, &m.to_json())?;
            written.push(path);
        }
    }
    Ok(written)
}

fn write_file(path: &Path, body: &str) -> Result<(), CliError> {
    std::fs::write(path, format!("{body}\n")).map_err(|e| CliError::io(path, e))
}

/// Runs the configured suites over `inputs`, or over generated instances
/// when `inputs` is empty.
pub fn cmd_check(config: &RunConfig, inputs: &[PathBuf]) -> Result<Report, CliError> {
    config.validate()?;
    let instances = if inputs.is_empty() {
        None
    } else {
        let loaded = inputs
            .iter()
            .map(|p| input::load(p))
            .collect::<Result<Vec<_>, _>>()?;
        for (path, inst) in inputs.iter().zip(&loaded) {
            input::check_supported(path, inst, config.mode)?;
        }
        Some(inputs.iter().cloned().zip(loaded).collect::<Vec<_>>())
    };
    Ok(suite::run(config, instances))
}

/// Runs `cmd_check` and writes the report to `out`, or stdout without one.
/// Returns the process exit code.
pub fn run_check(config: &RunConfig, inputs: &[PathBuf], out: Option<&Path>) -> Result<i32, CliError> {
    let report = cmd_check(config, inputs)?;
    let body = serde_json::to_string_pretty(&report).expect("report serializes");
    match out {
        Some(path) => write_file(path, &body)?,
        None => println!("{body}"),
    }
    Ok(report.exit_code())
}
