//! Optional TOML config file. Unknown keys and non-positive bounds are
//! rejected; command-line flags take precedence over file values.

use std::num::{NonZeroU64, NonZeroUsize};
use std::path::Path;

use clap::ValueEnum;
use serde::Deserialize;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    /// Pretty-printed JSON; exact values as integers or "p/q" strings.
    Structured,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliConfig {
    pub output_format: Option<Format>,
    pub verbosity: Option<u8>,
    #[serde(default)]
    pub enumeration_bounds: Bounds,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bounds {
    /// Largest group order searched for a finite-form isometry.
    pub iso_search: Option<NonZeroU64>,
    /// Most codewords listed for a weight distribution.
    pub max_codewords: Option<NonZeroUsize>,
    /// Longest code length admitted by exhaustive search.
    pub search_max_length: Option<NonZeroUsize>,
    /// Largest code dimension admitted by exhaustive search.
    pub search_max_dim: Option<NonZeroUsize>,
}

impl Bounds {
    pub fn iso_search(&self) -> u64 {
        self.iso_search.map_or(lattice_core::DEFAULT_SEARCH_BOUND, NonZeroU64::get)
    }

    pub fn max_codewords(&self) -> usize {
        self.max_codewords.map_or(1 << 20, NonZeroUsize::get)
    }

    pub fn search(&self) -> ternary_codes::SearchBounds {
        let d = ternary_codes::SearchBounds::default();
        ternary_codes::SearchBounds {
            max_length: self.search_max_length.map_or(d.max_length, NonZeroUsize::get),
            max_dim: self.search_max_dim.map_or(d.max_dim, NonZeroUsize::get),
        }
    }
}

impl CliConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| CliError::Parse(format!("config: {}", e.message())))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }
}
