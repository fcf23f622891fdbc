//! Run configuration: command-line flags, then `CLASSCOVER_*` variables,
//! then an optional TOML or JSON file, then defaults.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use classcover_core::group::{DEFAULT_ENUMERATION_CAP, DEFAULT_LATTICE_CAP, DEFAULT_SUBGROUP_CAP};
use classcover_core::matgrp::DEFAULT_ALGEBRA_CAP;
use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Options shared by every subcommand.
#[derive(Clone, Debug, Default, Args)]
pub struct CommonArgs {
    /// TOML or JSON file with defaults for the options below.
    #[arg(long, global = true, env = "CLASSCOVER_CONFIG")]
    pub config: Option<PathBuf>,
    /// Largest group order built by enumeration.
    #[arg(long, global = true, env = "CLASSCOVER_ENUM_CAP")]
    pub enum_cap: Option<usize>,
    /// Largest number of classes for normal-subgroup lattices.
    #[arg(long, global = true, env = "CLASSCOVER_LATTICE_CAP")]
    pub lattice_cap: Option<usize>,
    /// Largest centralizer algebra enumerated for SL checks.
    #[arg(long, global = true, env = "CLASSCOVER_ALGEBRA_CAP")]
    pub algebra_cap: Option<u128>,
    /// Largest group order whose subgroups are all enumerated.
    #[arg(long, global = true, env = "CLASSCOVER_SUBGROUP_CAP")]
    pub subgroup_cap: Option<usize>,
    /// Directory for cached class tables.
    #[arg(long, global = true, env = "CLASSCOVER_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, env = "CLASSCOVER_FORMAT")]
    pub format: Option<Format>,
    /// Worker threads for sweeps; all cores when unset.
    #[arg(long, global = true, env = "CLASSCOVER_THREADS")]
    pub threads: Option<usize>,
    #[arg(long, global = true, env = "CLASSCOVER_SEED")]
    pub seed: Option<u64>,
    /// Report file; standard output when unset.
    #[arg(long, global = true, env = "CLASSCOVER_OUT")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    enum_cap: Option<usize>,
    lattice_cap: Option<usize>,
    algebra_cap: Option<u128>,
    subgroup_cap: Option<usize>,
    cache_dir: Option<PathBuf>,
    format: Option<Format>,
    threads: Option<usize>,
    seed: Option<u64>,
    out: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub enum_cap: usize,
    pub lattice_cap: usize,
    pub algebra_cap: u128,
    pub subgroup_cap: usize,
    pub cache_dir: Option<PathBuf>,
    pub format: Format,
    pub threads: Option<usize>,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            enum_cap: DEFAULT_ENUMERATION_CAP,
            lattice_cap: DEFAULT_LATTICE_CAP,
            algebra_cap: DEFAULT_ALGEBRA_CAP,
            subgroup_cap: DEFAULT_SUBGROUP_CAP,
            cache_dir: None,
            format: Format::Csv,
            threads: None,
            seed: 0,
            out: None,
        }
    }
}

fn read_file(path: &Path) -> anyhow::Result<FileConfig> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
    let parsed = match path.extension().and_then(|e| e.to_str()) {
        Some("json") => serde_json::from_str(&text).map_err(anyhow::Error::from),
        _ => toml::from_str(&text).map_err(anyhow::Error::from),
    };
    parsed.with_context(|| format!("parsing config {}", path.display()))
}

impl RunConfig {
    /// Flags and environment arrive merged by clap; the file fills gaps.
    pub fn resolve(args: &CommonArgs) -> anyhow::Result<RunConfig> {
        let file = match &args.config {
            Some(p) => read_file(p)?,
            None => FileConfig::default(),
        };
        let d = RunConfig::default();
        let cfg = RunConfig {
            enum_cap: args.enum_cap.or(file.enum_cap).unwrap_or(d.enum_cap),
            lattice_cap: args.lattice_cap.or(file.lattice_cap).unwrap_or(d.lattice_cap),
            algebra_cap: args.algebra_cap.or(file.algebra_cap).unwrap_or(d.algebra_cap),
            subgroup_cap: args.subgroup_cap.or(file.subgroup_cap).unwrap_or(d.subgroup_cap),
            cache_dir: args.cache_dir.clone().or(file.cache_dir),
            format: args.format.or(file.format).unwrap_or(d.format),
            threads: args.threads.or(file.threads),
            seed: args.seed.or(file.seed).unwrap_or(d.seed),
            out: args.out.clone().or(file.out),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if self.enum_cap == 0 || self.lattice_cap == 0 || self.algebra_cap == 0 || self.subgroup_cap == 0 {
            bail!("caps must be positive");
        }
        if self.threads == Some(0) {
            bail!("threads must be positive");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_fills_gaps_only() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.toml");
        std::fs::write(&path, "enum_cap = 5000\nseed = 9\nformat = \"json\"\n").unwrap();
        let args = CommonArgs {
            config: Some(path),
            seed: Some(3),
            ..Default::default()
        };
        let cfg = RunConfig::resolve(&args).unwrap();
        assert_eq!(cfg.enum_cap, 5000);
        assert_eq!(cfg.seed, 3);
        assert_eq!(cfg.format, Format::Json);
    }

    #[test]
    fn rejects_unknown_keys_and_zero_caps() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        std::fs::write(&path, r#"{"enum_cap": 10, "colour": "red"}"#).unwrap();
        let args = CommonArgs {
            config: Some(path),
            ..Default::default()
        };
        assert!(RunConfig::resolve(&args).is_err());
        let zero = CommonArgs {
            lattice_cap: Some(0),
            ..Default::default()
        };
        assert!(RunConfig::resolve(&zero).is_err());
    }
}
