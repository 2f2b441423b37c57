//! Command-line flags, the optional TOML file, and their merge into one
//! resolved configuration. Flags win over the file, the file wins over the
//! built-in defaults.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::Deserialize;
use sva_core::sva::{LinkWeighting, SmoothingConfig};
use sva_core::{ScoringOptions, SvaError, WindowConfig};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "SVA_OUT_DIR";
pub const DEFAULT_OUT_DIR: &str = "sva-out";
pub const DEFAULT_TOP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    Graphml,
    Dot,
    None,
}

impl ExportFormat {
    pub fn extension(self) -> Option<&'static str> {
        match self {
            ExportFormat::Graphml => Some("graphml"),
            ExportFormat::Dot => Some("dot"),
            ExportFormat::None => None,
        }
    }
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Line-delimited JSON corpus file.
    #[arg(long, value_name = "PATH")]
    pub corpus: Option<PathBuf>,
    /// TOML file supplying any of the options below.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Output directory [default: $SVA_OUT_DIR or ./sva-out].
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// Year whose papers are scored.
    #[arg(long)]
    pub target_year: Option<i32>,
    /// Baseline window length in years [default: 5].
    #[arg(long)]
    pub window: Option<u32>,
    /// Analysis frame length in years [default: 5].
    #[arg(long)]
    pub frame: Option<u32>,
    /// g-index scaling factor; a comma list runs a sweep [default: 5].
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub k: Option<Vec<u32>>,
    /// Link-retaining factor [default: 3].
    #[arg(long)]
    pub lrf: Option<u32>,
    /// Strongest links kept per node [default: 10].
    #[arg(long)]
    pub max_links: Option<u32>,
    /// Look-back years, -1 for unlimited [default: -1].
    #[arg(long, allow_negative_numbers = true)]
    pub lby: Option<i32>,
    /// Minimum in-window citations for a node [default: 0].
    #[arg(long)]
    pub e: Option<f64>,
    /// Betweenness smoothing constant [default: 1e-9].
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Network export format [default: graphml].
    #[arg(long, value_enum)]
    pub format: Option<ExportFormat>,
    /// Shuffle the Louvain sweep order with this seed.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum KSetting {
    One(u32),
    Many(Vec<u32>),
}

/// Contents of the `--config` file. Every key is optional.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    corpus: Option<PathBuf>,
    out: Option<PathBuf>,
    target_year: Option<i32>,
    window: Option<u32>,
    frame: Option<u32>,
    k: Option<KSetting>,
    lrf: Option<u32>,
    max_links: Option<u32>,
    lby: Option<i32>,
    e: Option<f64>,
    epsilon: Option<f64>,
    format: Option<ExportFormat>,
    seed: Option<u64>,
    pub seeds: Option<Vec<String>>,
    pub targets: Option<Vec<String>>,
    pub top: Option<usize>,
    pub backward: Option<usize>,
    pub forward: Option<usize>,
    pub strict: Option<bool>,
}

pub fn config_error(field: &'static str, message: impl Into<String>) -> SvaError {
    SvaError::InvalidConfig {
        field,
        message: message.into(),
    }
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, SvaError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| config_error("config", format!("{}: {e}", path.display())))?;
        toml::from_str(&text)
            .map_err(|e| config_error("config", format!("{}: {e}", path.display())))
    }
}

/// Fully resolved settings shared by the subcommands.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub corpus: PathBuf,
    pub out: PathBuf,
    pub target_year: Option<i32>,
    /// One entry per k value, in the order given.
    pub windows: Vec<WindowConfig>,
    pub options: ScoringOptions,
    pub format: ExportFormat,
    pub file: FileConfig,
}

impl Resolved {
    pub fn new(args: &CommonArgs) -> Result<Self, SvaError> {
        let file = match &args.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let corpus = args
            .corpus
            .clone()
            .or_else(|| file.corpus.clone())
            .ok_or_else(|| config_error("corpus", "no corpus file given"))?;
        let out = args
            .out
            .clone()
            .or_else(|| file.out.clone())
            .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT_DIR));
        let ks = match (&args.k, &file.k) {
            (Some(ks), _) => ks.clone(),
            (None, Some(KSetting::One(k))) => vec![*k],
            (None, Some(KSetting::Many(ks))) => ks.clone(),
            (None, None) => vec![WindowConfig::DEFAULT_K],
        };
        if ks.is_empty() {
            return Err(config_error("k", "at least one value is required"));
        }
        let target_year = args.target_year.or(file.target_year);
        // Placeholder year until the subcommand fixes the real one.
        let mut base = WindowConfig::new(target_year.unwrap_or(0));
        base.window_years = args.window.or(file.window).unwrap_or(base.window_years);
        base.frame_years = args.frame.or(file.frame).unwrap_or(base.frame_years);
        base.lrf = args.lrf.or(file.lrf).unwrap_or(base.lrf);
        base.max_links = args.max_links.or(file.max_links).unwrap_or(base.max_links);
        base.lby = args.lby.or(file.lby).unwrap_or(base.lby);
        base.e = args.e.or(file.e).unwrap_or(base.e);
        let windows: Vec<WindowConfig> = ks.iter().map(|&k| base.clone().with_k(k)).collect();
        for w in &windows {
            w.validate()?;
        }
        let epsilon = args
            .epsilon
            .or(file.epsilon)
            .unwrap_or(SmoothingConfig::DEFAULT_EPSILON);
        let options = ScoringOptions {
            smoothing: SmoothingConfig::new(epsilon)?,
            link_weighting: LinkWeighting::default(),
            louvain: sva_core::analytics::LouvainConfig {
                seed: args.seed.or(file.seed),
            },
        };
        let format = args.format.or(file.format).unwrap_or(ExportFormat::Graphml);
        Ok(Resolved {
            corpus,
            out,
            target_year,
            windows,
            options,
            format,
            file,
        })
    }

    /// Window configurations for `year`.
    pub fn windows_for(&self, year: i32) -> Vec<WindowConfig> {
        self.windows
            .iter()
            .map(|w| WindowConfig {
                target_year: year,
                ..w.clone()
            })
            .collect()
    }

    pub fn require_target_year(&self) -> Result<i32, SvaError> {
        self.target_year
            .ok_or_else(|| config_error("target_year", "no target year given"))
    }

    pub fn is_sweep(&self) -> bool {
        self.windows.len() > 1
    }
}
