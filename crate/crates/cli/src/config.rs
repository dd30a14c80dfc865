use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use ringlab_core::Limits;
use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

/// Settings read from `--config`; flags given on the command line win.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub max_enumeration: Option<u64>,
    pub socle_cap: Option<u64>,
    pub threads: Option<usize>,
    pub format: Option<Format>,
    pub slow: Option<bool>,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// JSON file with default settings
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Largest ring (in elements) any scan may enumerate
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_enumeration: Option<u64>,
    /// Largest ring on which socles are computed
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub socle_cap: Option<u64>,
    /// Worker threads (default: available parallelism)
    #[arg(long, global = true, env = "RINGLAB_THREADS")]
    pub threads: Option<usize>,
    /// Corpus manifest to use instead of the built-in one
    #[arg(long, global = true)]
    pub corpus: Option<PathBuf>,
    /// Include slow-tier corpus entries and grid points
    #[arg(long, global = true)]
    pub slow: bool,
    /// Add wall-clock timings to verification reports
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub limits: Limits,
    pub threads: Option<usize>,
    pub format: Format,
    pub slow: bool,
    pub timings: bool,
}

fn read_file(path: &Path) -> Result<FileConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("config {}: {e}", path.display()))
}

impl RunConfig {
    pub fn resolve(args: &GlobalArgs) -> Result<Self, String> {
        let file = match &args.config {
            Some(p) => read_file(p)?,
            None => FileConfig::default(),
        };
        let defaults = Limits::default();
        let limits = Limits {
            enumeration_cap: args
                .max_enumeration
                .or(file.max_enumeration)
                .unwrap_or(defaults.enumeration_cap),
            socle_cap: args
                .socle_cap
                .or(file.socle_cap)
                .unwrap_or(defaults.socle_cap),
        };
        if limits.enumeration_cap == 0 || limits.socle_cap == 0 {
            return Err("caps must be positive".into());
        }
        let threads = args.threads.or(file.threads);
        if threads == Some(0) {
            return Err("--threads must be positive".into());
        }
        Ok(RunConfig {
            limits,
            threads,
            format: args.format.or(file.format).unwrap_or(Format::Json),
            slow: args.slow || file.slow.unwrap_or(false),
            timings: args.timings,
        })
    }
}
