//! JSON formats for Lie algebra specs and module files.
//!
//! A spec lists the brackets `[x_i, x_j]` for `i < j`, 1-based:
//!
//! ```json
//! {"dim": 3, "names": ["x", "y", "z"],
//!  "brackets": [{"i": 1, "j": 2, "coeffs": {"3": 1}}]}
//! ```
//!
//! A module gives one `m×m` matrix per generator:
//!
//! ```json
//! {"dim": 1, "action": [[["0"]], [["0"]], [["0"]]]}
//! ```
//!
//! Numbers may be JSON integers or strings such as `"-3/2"`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{GModule, LieAlgebra};
use crate::linalg::Matrix;
use crate::scalar::{parse_scalar, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    pub fn value(&self) -> Result<Scalar> {
        match self {
            Number::Int(n) => Ok(Scalar::from_integer((*n).into())),
            Number::Text(t) => parse_scalar(t),
        }
    }
}

impl From<&Scalar> for Number {
    fn from(c: &Scalar) -> Self {
        if c.is_integer() {
            if let Ok(n) = c.to_integer().try_into() {
                return Number::Int(n);
            }
        }
        Number::Text(c.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, Number>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieSpec {
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub dim: usize,
    pub action: Vec<Vec<Vec<Number>>>,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

impl LieSpec {
    /// Builds the algebra; structural and integrality checks are left to
    /// [`LieAlgebra::validate`].
    pub fn build(&self) -> Result<LieAlgebra> {
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for entry in &self.brackets {
            if entry.i == 0 || entry.j == 0 {
                return Err(Error::Parse("bracket indices are 1-based".into()));
            }
            let mut coeffs = Vec::with_capacity(entry.coeffs.len());
            for (k, c) in &entry.coeffs {
                let k: usize = k.trim().parse().map_err(|_| Error::Parse(format!("bad bracket target {k:?}")))?;
                if k == 0 {
                    return Err(Error::Parse("bracket targets are 1-based".into()));
                }
                coeffs.push((k - 1, c.value()?));
            }
            brackets.push((entry.i - 1, entry.j - 1, coeffs));
        }
        let lie = LieAlgebra::from_brackets(self.dim, &brackets)?;
        match &self.names {
            Some(names) => lie.renamed(names.clone()),
            None => Ok(lie),
        }
    }

    pub fn from_algebra(lie: &LieAlgebra) -> Self {
        let d = lie.dim();
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let b = lie.bracket(i, j);
                if !b.is_empty() {
                    let coeffs = b.iter().map(|(k, c)| ((k + 1).to_string(), Number::from(c))).collect();
                    brackets.push(BracketEntry { i: i + 1, j: j + 1, coeffs });
                }
            }
        }
        LieSpec { dim: d, brackets, names: Some(lie.names().to_vec()) }
    }
}

pub fn parse_lie_spec(text: &str) -> Result<LieAlgebra> {
    serde_json::from_str::<LieSpec>(text).map_err(json_error)?.build()
}

pub fn load_lie_spec(path: &Path) -> Result<LieAlgebra> {
    parse_lie_spec(&read(path)?)
}

pub fn lie_spec_json(lie: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&LieSpec::from_algebra(lie)).expect("spec serializes")
}

impl ModuleSpec {
    pub fn build(&self, lie_dim: usize) -> Result<GModule> {
        if self.action.len() != lie_dim {
            return Err(Error::DimensionMismatch { expected: lie_dim, found: self.action.len() });
        }
        let mut mats = Vec::with_capacity(lie_dim);
        for rows in &self.action {
            let rows = rows
                .iter()
                .map(|row| row.iter().map(Number::value).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            if rows.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: rows.len() });
            }
            let mat = if self.dim == 0 {
                Matrix::zeros(0, 0)
            } else {
                Matrix::from_rows(rows).ok_or_else(|| Error::Parse("ragged action matrix".into()))?
            };
            mats.push(mat);
        }
        GModule::new(self.dim, mats)
    }

    pub fn from_module(module: &GModule) -> Self {
        let action = (0..module.generators())
            .map(|i| module.action(i).to_rows().iter().map(|row| row.iter().map(Number::from).collect()).collect())
            .collect();
        ModuleSpec { dim: module.dim(), action }
    }
}

pub fn parse_module(text: &str, lie_dim: usize) -> Result<GModule> {
    serde_json::from_str::<ModuleSpec>(text).map_err(json_error)?.build(lie_dim)
}

pub fn load_module(path: &Path, lie_dim: usize) -> Result<GModule> {
    parse_module(&read(path)?, lie_dim)
}

pub fn module_json(module: &GModule) -> String {
    serde_json::to_string_pretty(&ModuleSpec::from_module(module)).expect("module serializes")
}
