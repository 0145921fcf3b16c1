use std::fmt;
use std::str::FromStr;

use interlace::{parse_rational, Rational};
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Interlacing by the root-chain definition on constructed pairs.
    Definition,
    /// Definition and pencil scan cross-checked on `det(xI - A)`, `det(xI - B)`.
    Pencil,
    /// Bordered determinant identity.
    Identity,
    /// Cauchy interlacing for every single-index deletion.
    Cauchy,
    All,
}

impl Mode {
    pub fn suites(self) -> &'static [Mode] {
        match self {
            Mode::All => &[Mode::Definition, Mode::Pencil, Mode::Identity, Mode::Cauchy],
            Mode::Definition => &[Mode::Definition],
            Mode::Pencil => &[Mode::Pencil],
            Mode::Identity => &[Mode::Identity],
            Mode::Cauchy => &[Mode::Cauchy],
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Mode::Definition => "definition",
            Mode::Pencil => "pencil",
            Mode::Identity => "identity",
            Mode::Cauchy => "cauchy",
            Mode::All => "all",
        };
        f.write_str(s)
    }
}

/// A rational given on the command line as `p` or `p/q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalArg(pub Rational);

impl FromStr for RationalArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational(s).map(RationalArg).map_err(|e| e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: usize,
    pub size_min: usize,
    pub size_max: usize,
    pub entry_bound: i64,
    pub alpha_count: usize,
    pub mode: Mode,
    #[serde(with = "interlace::rational::serde_str")]
    pub width: Rational,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            trials: 1,
            size_min: 2,
            size_max: 6,
            entry_bound: 10,
            alpha_count: interlace::interlace::DEFAULT_RANDOM_ALPHAS,
            mode: Mode::All,
            width: interlace::hermitian::default_width(),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |m: String| Err(CliError::Config(m));
        if self.trials < 1 {
            return bad("--trials must be at least 1".into());
        }
        if self.entry_bound < 1 {
            return bad(format!("--bound must be at least 1, got {}", self.entry_bound));
        }
        if self.size_min > self.size_max {
            return bad(format!(
                "--size-min {} exceeds --size-max {}",
                self.size_min, self.size_max
            ));
        }
        let needs_two = self.mode.suites().iter().any(|m| *m != Mode::Definition);
        if self.size_min < 1 || (needs_two && self.size_min < 2) {
            return bad(format!("--size-min must be at least 2 for mode {}", self.mode));
        }
        if self.alpha_count < 1 {
            return bad("--alphas must be at least 1".into());
        }
        if self.width <= Rational::from_integer(0.into()) {
            return bad("--width must be positive".into());
        }
        Ok(())
    }
}
