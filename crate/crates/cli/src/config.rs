use std::path::Path;

use serde::Deserialize;

use crate::args::{Format, Global};
use crate::error::CliError;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub max_weight: Option<u32>,
    pub max_r: Option<u32>,
    pub threads: Option<usize>,
    pub format: Option<Format>,
}

/// Flags override the file, the file overrides the defaults.
#[derive(Debug, Clone)]
pub struct Settings {
    pub format: Format,
    pub max_weight: u32,
    /// Whether `max_weight` was set explicitly rather than defaulted.
    pub max_weight_given: bool,
    pub max_r: u32,
    pub threads: Option<usize>,
    pub timing: bool,
}

pub fn load(path: &Path) -> Result<FileConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn resolve(g: &Global) -> Result<Settings, CliError> {
    let file = match &g.config {
        Some(p) => load(p)?,
        None => FileConfig::default(),
    };
    let defaults = jue_core::hurwitz::Guards::default();
    let weight = g.max_weight.or(file.max_weight);
    Ok(Settings {
        format: g.format.or(file.format).unwrap_or(Format::Json),
        max_weight: weight.unwrap_or(defaults.max_n),
        max_weight_given: weight.is_some(),
        max_r: g.max_r.or(file.max_r).unwrap_or(defaults.max_r),
        threads: g.threads.or(file.threads),
        timing: g.timing,
    })
}
