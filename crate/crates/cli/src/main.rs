use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use interlace_cli::config::RationalArg;
use interlace_cli::{cmd_gen, run_check, Mode, RunConfig};

/// Exact checks of eigenvalue interlacing and real-rooted pencils.
#[derive(Parser)]
#[command(name = "interlace", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write seeded random Hermitian matrices as JSON.
    Gen {
        #[command(flatten)]
        run: RunArgs,
        /// Output file (one trial) or directory (several).
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the verification suites and emit a JSON report.
    Check {
        #[command(flatten)]
        run: RunArgs,
        /// Report path; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Matrix or polynomial-pair files; instances are generated if none given.
        inputs: Vec<PathBuf>,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    #[arg(long, default_value_t = 2)]
    size_min: usize,
    #[arg(long, default_value_t = 6)]
    size_max: usize,
    /// Bound on the real and imaginary parts of generated entries.
    #[arg(long, default_value_t = 10)]
    bound: i64,
    /// Number of random α added to the fixed pencil grid.
    #[arg(long, default_value_t = 64)]
    alphas: usize,
    #[arg(long, value_enum, default_value_t = Mode::All)]
    mode: Mode,
    /// Eigenvalue interval width, `p/q`.
    #[arg(long, default_value = "1/1048576")]
    width: RationalArg,
}

impl From<RunArgs> for RunConfig {
    fn from(a: RunArgs) -> Self {
        RunConfig {
            seed: a.seed,
            trials: a.trials,
            size_min: a.size_min,
            size_max: a.size_max,
            entry_bound: a.bound,
            alpha_count: a.alphas,
            mode: a.mode,
            width: a.width.0,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { 2 } else { 0 };
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Gen { run, out } => cmd_gen(&run.into(), &out).map(|_| 0),
        Command::Check { run, out, inputs } => run_check(&run.into(), &inputs, out.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
