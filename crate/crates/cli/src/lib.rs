//! Library half of the `heron-quad` binary; every subcommand returns an
//! [`Outcome`] so tests can drive commands without spawning a process.

pub mod commands;
pub mod render;
pub mod svg;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use heron_quad_core::verify::Erratum;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const IO: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const DOMAIN: i32 = 3;
    pub const VERIFICATION: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => exit::PARSE,
            CliError::Domain(_) => exit::DOMAIN,
            CliError::Io(_) => exit::IO,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "heron-quad", version, about = "Exact solver for a·sin x + b·cos x = c and its cyclic quadrilaterals")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify and enumerate the solutions of α·sin x + β·cos x = γ.
    #[command(allow_negative_numbers = true)]
    Solve {
        alpha: String,
        beta: String,
        gamma: String,
        /// Range of k as `lo..hi` (inclusive).
        #[arg(long = "k", default_value = "0..0", allow_hyphen_values = true)]
        k: String,
        /// Relative boundary tolerance for decimal inputs.
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Build the quadrilateral ΓBΓ₂Γ₁ on a right triangle α² + β² = γ².
    Construct {
        alpha: String,
        beta: String,
        gamma: String,
        /// Also write the figure as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Enumerate family members generated by (t₁, t₂) and δ.
    Family {
        #[arg(long)]
        t_max: u64,
        #[arg(long, default_value_t = 1)]
        delta_max: u64,
        #[arg(long)]
        heron_only: bool,
    },
    /// Tabulate Heron members with δ = jL, j = 1..=J.
    HeronTable {
        #[arg(long, default_value_t = 3)]
        t_max: u64,
        #[arg(long, default_value_t = 1)]
        delta_multiples: u64,
    },
    /// Re-derive every property with the coordinate oracles.
    Verify {
        /// JSON file: a `construct` envelope, {alpha, beta, gamma} or {delta, m, n}.
        #[arg(long, conflicts_with_all = ["triple", "params"])]
        input: Option<PathBuf>,
        /// α β γ
        #[arg(long, allow_hyphen_values = true, num_args = 3, value_names = ["ALPHA", "BETA", "GAMMA"], conflicts_with = "params")]
        triple: Option<Vec<String>>,
        /// δ m n
        #[arg(long, num_args = 3, value_names = ["DELTA", "M", "N"])]
        params: Option<Vec<u64>>,
    },
    /// Emit the construction as SVG.
    Svg { alpha: String, beta: String, gamma: String },
}

/// The JSON document every command prints.
#[derive(Debug, Clone, Serialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub errata: Vec<Erratum>,
    pub version: String,
}

impl OutputEnvelope {
    pub fn new(command: &str, inputs: Value, result: Value, errata: Vec<Erratum>) -> Self {
        Self { command: command.to_string(), inputs, result, errata, version: VERSION.to_string() }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub envelope: OutputEnvelope,
    /// Pre-rendered CSV when the command supports it.
    pub csv: Option<String>,
    /// Raw text output that replaces the envelope (the `svg` command).
    pub raw: Option<String>,
    pub exit_code: i32,
}

impl Outcome {
    pub fn json(envelope: OutputEnvelope) -> Self {
        Self { envelope, csv: None, raw: None, exit_code: exit::SUCCESS }
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        if let Some(raw) = &self.raw {
            return Ok(raw.clone());
        }
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.envelope).expect("envelope serializes");
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self
                .csv
                .clone()
                .ok_or_else(|| CliError::Parse(format!("--format csv is not available for `{}`", self.envelope.command))),
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    commands::dispatch(&cli.command)
}
