//! Run configuration: command-line flags layered over an optional TOML file
//! layered over defaults.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, ValueEnum};
use kronecker_core::analysis::RbVariant;
use kronecker_core::linalg::parse_scalar;
use kronecker_core::{Orientation, Scalar, VertexAddress};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Case {
    /// Pick the recipe from `(n, b, r)`.
    #[default]
    Auto,
    One,
    Two,
    Three,
    Family,
}

impl FromStr for Case {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().trim_start_matches("case").trim_start_matches('_') {
            "auto" => Ok(Case::Auto),
            "i" | "1" => Ok(Case::One),
            "ii" | "2" => Ok(Case::Two),
            "iii" | "3" => Ok(Case::Three),
            "family" => Ok(Case::Family),
            _ => Err(format!("unknown case {s:?} (expected auto, I, II, III or family)")),
        }
    }
}

/// Flags shared by every subcommand; each one overrides the config file.
#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// TOML file with defaults for any of the flags below
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Valence of the tree
    #[arg(long)]
    pub n: Option<u32>,
    /// Whether even-depth vertices are sinks
    #[arg(long)]
    pub sinks_even: Option<bool>,
    /// Construction recipe: auto, I, II, III or family
    #[arg(long)]
    pub case: Option<Case>,
    /// Minimal sink radius of the constructed module
    #[arg(long)]
    pub r: Option<usize>,
    /// Length of the center path
    #[arg(long)]
    pub b: Option<usize>,
    /// Center path as comma-separated addresses; `root` or an empty entry is the root
    #[arg(long, allow_hyphen_values = true)]
    pub path: Option<String>,
    /// Family parameter, an integer or a fraction p/q
    #[arg(long)]
    pub lambda: Option<String>,
    /// First step of the window (or first index of an R_b table)
    #[arg(long, allow_hyphen_values = true)]
    pub from: Option<i64>,
    /// Last step of the window (or last index of an R_b table)
    #[arg(long, allow_hyphen_values = true)]
    pub to: Option<i64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the main output here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Representation JSON to use as the seed
    #[arg(long)]
    pub seed_file: Option<PathBuf>,
    /// R_b variant: corrected or printed
    #[arg(long)]
    pub variant: Option<String>,
    /// Largest quasi-length in an R_b table
    #[arg(long)]
    pub lmax: Option<u64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(untagged)]
enum PathField {
    #[default]
    Missing,
    List(Vec<String>),
    Text(String),
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ScalarField {
    Int(i64),
    Text(String),
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    n: Option<u32>,
    sinks_even: Option<bool>,
    case: Option<String>,
    r: Option<usize>,
    b: Option<usize>,
    #[serde(default)]
    path: PathField,
    lambda: Option<ScalarField>,
    from: Option<i64>,
    to: Option<i64>,
    format: Option<Format>,
    out: Option<PathBuf>,
    seed_file: Option<PathBuf>,
    variant: Option<String>,
    lmax: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub orientation: Orientation,
    pub case: Case,
    pub r: Option<usize>,
    pub b: Option<usize>,
    pub path: Option<Vec<VertexAddress>>,
    pub lambda: Option<Scalar>,
    pub from: Option<i64>,
    pub to: Option<i64>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub seed_file: Option<PathBuf>,
    pub variant: RbVariant,
    pub lmax: u64,
}

impl RunConfig {
    /// True if any construction flag was given.
    pub fn has_construction(&self) -> bool {
        self.r.is_some() || self.b.is_some() || self.path.is_some() || self.case != Case::Auto
    }

    /// The window, if both ends are known, checked for order.
    pub fn window_or(&self, default: (i64, i64)) -> Result<(i64, i64), CliError> {
        let lo = self.from.unwrap_or(default.0);
        let hi = self.to.unwrap_or(default.1);
        if lo > hi {
            return Err(CliError::Usage(format!("empty window: --from {lo} is after --to {hi}")));
        }
        Ok((lo, hi))
    }
}

fn parse_path(entries: &[String], n: u32) -> Result<Vec<VertexAddress>, CliError> {
    entries
        .iter()
        .map(|e| {
            let e = e.trim();
            let text = if e == "root" { "" } else { e };
            let v: VertexAddress = text.parse().map_err(|err| CliError::Usage(format!("{err}")))?;
            v.validate(n).map_err(|err| CliError::Usage(err.to_string()))?;
            Ok(v)
        })
        .collect()
}

fn split_path(text: &str) -> Vec<String> {
    text.split(',').map(str::to_string).collect()
}

fn read_config(path: &Path) -> Result<FileConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))
}

/// Merges flags over the config file over defaults.
pub fn resolve(flags: &Flags) -> Result<RunConfig, CliError> {
    let file = match &flags.config {
        Some(p) => read_config(p)?,
        None => FileConfig::default(),
    };
    let n = flags.n.or(file.n).unwrap_or(3);
    let sinks_even = flags.sinks_even.or(file.sinks_even).unwrap_or(true);
    let orientation = Orientation::new(n, sinks_even).map_err(|e| CliError::Usage(e.to_string()))?;
    let case = match (flags.case, &file.case) {
        (Some(c), _) => c,
        (None, Some(text)) => text.parse().map_err(CliError::Usage)?,
        (None, None) => Case::Auto,
    };
    let path = match (&flags.path, file.path) {
        (Some(text), _) => Some(parse_path(&split_path(text), n)?),
        (None, PathField::List(list)) => Some(parse_path(&list, n)?),
        (None, PathField::Text(text)) => Some(parse_path(&split_path(&text), n)?),
        (None, PathField::Missing) => None,
    };
    let lambda_text = match (&flags.lambda, file.lambda) {
        (Some(t), _) => Some(t.clone()),
        (None, Some(ScalarField::Int(v))) => Some(v.to_string()),
        (None, Some(ScalarField::Text(t))) => Some(t),
        (None, None) => None,
    };
    let lambda = lambda_text
        .map(|t| parse_scalar(&t).map_err(|e| CliError::Usage(e.to_string())))
        .transpose()?;
    let variant = flags
        .variant
        .clone()
        .or(file.variant)
        .map(|v| v.parse::<RbVariant>().map_err(|e| CliError::Usage(e.to_string())))
        .transpose()?
        .unwrap_or(RbVariant::Corrected);
    let lmax = flags.lmax.or(file.lmax).unwrap_or(6);
    if lmax == 0 {
        return Err(CliError::Usage("--lmax must be at least 1".into()));
    }
    Ok(RunConfig {
        orientation,
        case,
        r: flags.r.or(file.r),
        b: flags.b.or(file.b),
        path,
        lambda,
        from: flags.from.or(file.from),
        to: flags.to.or(file.to),
        format: flags.format.or(file.format),
        out: flags.out.clone().or(file.out),
        seed_file: flags.seed_file.clone().or(file.seed_file),
        variant,
        lmax,
    })
}
