//! Layered settings: command-line flag, then environment, then key=value
//! config file, then built-in default. Unknown config keys are hard
//! errors — a typo must not silently fall back to a default.

use std::path::{Path, PathBuf};

use paucity_core::cache::DEFAULT_CACHE_DIR;
use paucity_core::enumeration::DEFAULT_MEMORY_BUDGET;

use crate::output::CliError;

pub const ENV_CACHE_DIR: &str = "PAUCITY_CACHE_DIR";
pub const ENV_MEM_BUDGET: &str = "PAUCITY_MEM_BUDGET";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub cache_dir: PathBuf,
    pub mem_budget: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            cache_dir: PathBuf::from(DEFAULT_CACHE_DIR),
            mem_budget: DEFAULT_MEMORY_BUDGET,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub config: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub mem_budget: Option<u64>,
}

pub fn resolve(overrides: &Overrides) -> Result<Settings, CliError> {
    resolve_with(overrides, |name| std::env::var(name).ok())
}

pub fn resolve_with(
    overrides: &Overrides,
    env: impl Fn(&str) -> Option<String>,
) -> Result<Settings, CliError> {
    let mut settings = Settings::default();
    if let Some(path) = &overrides.config {
        apply_file(&mut settings, path)?;
    }
    if let Some(dir) = env(ENV_CACHE_DIR) {
        settings.cache_dir = PathBuf::from(dir);
    }
    if let Some(text) = env(ENV_MEM_BUDGET) {
        settings.mem_budget = parse_budget(&text, ENV_MEM_BUDGET)?;
    }
    if let Some(dir) = &overrides.cache_dir {
        settings.cache_dir = dir.clone();
    }
    if let Some(budget) = overrides.mem_budget {
        settings.mem_budget = budget;
    }
    Ok(settings)
}

fn apply_file(settings: &mut Settings, path: &Path) -> Result<(), CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        CliError::Precondition(format!("cannot read config {}: {e}", path.display()))
    })?;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Precondition(format!(
                "config {}:{}: expected key=value, got {raw:?}",
                path.display(),
                lineno + 1
            )));
        };
        let (key, value) = (key.trim(), value.trim());
        match key {
            "cache_dir" => settings.cache_dir = PathBuf::from(value),
            "mem_budget" => settings.mem_budget = parse_budget(value, key)?,
            other => {
                return Err(CliError::Precondition(format!(
                    "config {}:{}: unknown key {other:?} (known: cache_dir, mem_budget)",
                    path.display(),
                    lineno + 1
                )));
            }
        }
    }
    Ok(())
}

fn parse_budget(text: &str, source: &str) -> Result<u64, CliError> {
    text.parse::<u64>().map_err(|_| {
        CliError::Precondition(format!("{source} must be a byte count, got {text:?}"))
    })
}
