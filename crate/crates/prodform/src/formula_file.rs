//! Formula files: one TOML document per formula, coefficients as decimal
//! strings so no digits are lost between runs.
//!
//! ```toml
//! label = "Y8m10"
//! order = 8
//! kind = "plain"
//! w = ["0.3102...", "..."]   # w_0 .. w_m
//! gammas = []                  # γ_1 .. γ_G for processed formulae
//! source = "published coefficient table"
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use prodform_core::formulas::{lookup, CatalogFormula, ExponentialSequence, ProcessedFormula, StageCoefficients};
use prodform_core::formulas::{expand, expand_processed};
use prodform_core::solver::Solution;
use prodform_core::{QuadDouble, Real};

use crate::error::{CliError, CliResult};

/// Digits written for catalog entries: more than any table prints.
pub const CATALOG_DIGITS: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Plain,
    Kernel,
    Processed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormulaFile {
    pub label: String,
    pub order: u32,
    pub kind: Kind,
    pub w: Vec<String>,
    #[serde(default)]
    pub gammas: Vec<String>,
    #[serde(default)]
    pub source: String,
}

/// A formula file parsed into scalars of type `T`.
#[derive(Debug, Clone, PartialEq)]
pub enum Loaded<T> {
    Plain(StageCoefficients<T>),
    Kernel(StageCoefficients<T>),
    Processed(ProcessedFormula<T>),
}

impl<T: Real> Loaded<T> {
    pub fn kernel(&self) -> &StageCoefficients<T> {
        match self {
            Loaded::Plain(k) | Loaded::Kernel(k) => k,
            Loaded::Processed(p) => &p.kernel,
        }
    }

    /// Stage count `M` of the repeated part.
    pub fn stages(&self) -> usize {
        self.kernel().stage_count()
    }

    /// Exponentials for two terms; a kernel expands on its own.
    pub fn sequence(&self, terms: usize) -> CliResult<ExponentialSequence<T>> {
        Ok(match self {
            Loaded::Plain(k) | Loaded::Kernel(k) => expand(k, T::one(), terms)?,
            Loaded::Processed(p) => expand_processed(p, T::one(), terms)?,
        })
    }
}

fn decimals<T: Real>(xs: &[T], digits: usize) -> Vec<String> {
    xs.iter().map(|x| x.to_decimal(digits)).collect()
}

impl FormulaFile {
    pub fn parse(text: &str) -> CliResult<Self> {
        let f: FormulaFile = toml::from_str(text).map_err(|e| CliError::Usage(format!("formula file: {e}")))?;
        f.validate()?;
        Ok(f)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("formula files serialise")
    }

    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Usage(m) => CliError::Usage(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn write(&self, path: &Path) -> CliResult<()> {
        std::fs::write(path, self.to_toml()).map_err(|e| CliError::io(path, e))
    }

    fn validate(&self) -> CliResult<()> {
        if self.w.is_empty() {
            return Err(CliError::Usage(format!("{}: empty w", self.label)));
        }
        match (self.kind, self.gammas.is_empty()) {
            (Kind::Processed, true) => Err(CliError::Usage(format!("{}: processed formula without gammas", self.label))),
            (Kind::Plain | Kind::Kernel, false) => {
                Err(CliError::Usage(format!("{}: gammas are only allowed for processed formulae", self.label)))
            }
            _ => Ok(()),
        }
    }

    /// `catalog:LABEL` or a path to a formula file.
    pub fn resolve(spec: &str) -> CliResult<Self> {
        match spec.strip_prefix("catalog:") {
            Some(label) => Self::from_catalog(label),
            None => Self::read(Path::new(spec)),
        }
    }

    pub fn from_catalog(label: &str) -> CliResult<Self> {
        let e = lookup::<QuadDouble>(label)?;
        let (kind, w, gammas) = match &e.formula {
            CatalogFormula::Plain(k) => (Kind::Plain, &k.w, Vec::new()),
            CatalogFormula::Kernel(k) => (Kind::Kernel, &k.w, Vec::new()),
            CatalogFormula::Processed(p) => (Kind::Processed, &p.kernel.w, decimals(&p.gammas, CATALOG_DIGITS)),
            CatalogFormula::Unavailable => {
                return Err(CliError::Usage(format!("{label} has no published coefficients (constants only)")))
            }
        };
        Ok(FormulaFile {
            label: e.label,
            order: e.order,
            kind,
            w: decimals(w, CATALOG_DIGITS),
            gammas,
            source: e.source,
        })
    }

    pub fn from_solution<T: Real>(sol: &Solution<T>, label: &str, source: &str, digits: usize) -> Self {
        FormulaFile {
            label: label.to_string(),
            order: sol.order,
            kind: if sol.gammas.is_empty() { Kind::Plain } else { Kind::Processed },
            w: decimals(&sol.w, digits),
            gammas: decimals(&sol.gammas, digits),
            source: source.to_string(),
        }
    }

    pub fn load<T: Real>(&self) -> CliResult<Loaded<T>> {
        let parse = |xs: &[String]| -> CliResult<Vec<T>> {
            xs.iter().map(|s| T::parse_decimal(s.trim()).map_err(CliError::from)).collect()
        };
        let kernel = StageCoefficients::new(parse(&self.w)?, self.order, self.label.clone())?;
        Ok(match self.kind {
            Kind::Plain => Loaded::Plain(kernel),
            Kind::Kernel => Loaded::Kernel(kernel),
            Kind::Processed => Loaded::Processed(ProcessedFormula::new(kernel, parse(&self.gammas)?, self.order)?),
        })
    }
}
