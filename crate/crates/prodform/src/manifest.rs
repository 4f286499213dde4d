//! Run manifests: everything needed to repeat a run, written next to its output.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub subcommand: String,
    /// Scalar type name and its decimal digits.
    pub tier: String,
    pub digits: u32,
    pub jobs: usize,
    pub seeds: Vec<u64>,
    #[serde(default)]
    pub inputs: Vec<String>,
    #[serde(default)]
    pub outputs: Vec<String>,
    /// Conventions the numbers depend on (ensemble, basis ordering, ...).
    #[serde(default)]
    pub notes: Vec<String>,
    /// Every flag of the subcommand after defaults were applied.
    pub config: toml::Table,
}

impl RunManifest {
    pub fn new<C: Serialize>(subcommand: &str, tier: prodform_core::Tier, jobs: usize, config: &C) -> CliResult<Self> {
        let config = toml::Table::try_from(config).map_err(|e| CliError::Usage(format!("manifest: {e}")))?;
        Ok(RunManifest {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            subcommand: subcommand.to_string(),
            tier: tier.to_string(),
            digits: tier.digits(),
            jobs,
            seeds: Vec::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            notes: Vec::new(),
            config,
        })
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("manifests serialise")
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        toml::from_str(text).map_err(|e| CliError::Usage(format!("manifest: {e}")))
    }

    pub fn write(&self, path: &Path) -> CliResult<()> {
        std::fs::write(path, self.to_toml()).map_err(|e| CliError::io(path, e))
    }
}

/// `out.csv` -> `out.csv.manifest.toml`.
pub fn manifest_path(output: &Path) -> PathBuf {
    let mut s = output.as_os_str().to_owned();
    s.push(".manifest.toml");
    PathBuf::from(s)
}
