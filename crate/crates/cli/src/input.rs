//! Input files: a Hermitian matrix (`{"n", "entries"}`) or a polynomial
//! pair (`{"f": [...], "g": [...]}`, coefficients ascending).

use std::path::Path;

use interlace::{HermitianMatrix, Polynomial};
use serde::{Deserialize, Serialize};

use crate::{CliError, Mode};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialPair {
    pub f: Polynomial,
    pub g: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Matrix(HermitianMatrix),
    Pair(PolynomialPair),
}

pub fn parse(text: &str) -> Result<Instance, String> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let obj = value.as_object().ok_or("expected a JSON object")?;
    if obj.contains_key("entries") {
        serde_json::from_value(value).map(Instance::Matrix).map_err(|e| e.to_string())
    } else if obj.contains_key("f") || obj.contains_key("g") {
        let pair: PolynomialPair = serde_json::from_value(value).map_err(|e| e.to_string())?;
        if pair.f.is_zero() || pair.g.is_zero() {
            return Err("field \"f\"/\"g\": zero polynomial".into());
        }
        if pair.f.degree() != pair.g.degree() + 1 {
            return Err(format!(
                "field \"g\": degree {} but \"f\" has degree {}; need deg f = deg g + 1",
                pair.g.degree(),
                pair.f.degree()
            ));
        }
        Ok(Instance::Pair(pair))
    } else {
        Err("expected a matrix (\"n\", \"entries\") or a polynomial pair (\"f\", \"g\")".into())
    }
}

pub fn load(path: &Path) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse(&text).map_err(|message| CliError::Input {
        path: path.to_path_buf(),
        message,
    })
}

pub(crate) fn check_supported(path: &Path, inst: &Instance, mode: Mode) -> Result<(), CliError> {
    let err = |message: String| {
        Err(CliError::Input {
            path: path.to_path_buf(),
            message,
        })
    };
    match inst {
        Instance::Pair(_) if matches!(mode, Mode::Identity | Mode::Cauchy) => {
            err(format!("mode {mode} needs a matrix, got a polynomial pair"))
        }
        Instance::Matrix(m) if m.n() < 2 => {
            err(format!("mode {mode} needs n >= 2, got n = {}", m.n()))
        }
        _ => Ok(()),
    }
}
