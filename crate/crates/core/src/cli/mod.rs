//! Command-line front end.
//!
//! Configuration is layered: preset, then `--config` file, then `--set`
//! assignments, then the dedicated flags. Exit codes: 0 success, 2 invalid
//! configuration, 3 forbidden regime, 4 numerical non-convergence.

mod commands;
mod config;
mod output;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::classical::ClassicalError;
use crate::emission::EmissionError;
use crate::quantum::QuantumError;
use crate::specfun::SpecfunError;

pub use commands::{cmd_compton, cmd_floquet_map, cmd_quasimomentum, cmd_trajectory, Report};
pub use config::{find_preset, CommandKind, OutputFormat, Preset, RunConfig, SweepSpec, SweepVar, PRESETS};
pub use output::{num, Csv};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{0}")]
    Forbidden(String),
    #[error("numerical non-convergence: {0}")]
    NonConvergence(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Forbidden(_) => 3,
            CliError::NonConvergence(_) => 4,
        }
    }
}

impl From<SpecfunError> for CliError {
    fn from(e: SpecfunError) -> Self {
        match e {
            SpecfunError::NonConvergence(_) => CliError::NonConvergence(e.to_string()),
            _ => CliError::Config(e.to_string()),
        }
    }
}

impl From<ClassicalError> for CliError {
    fn from(e: ClassicalError) -> Self {
        match e {
            ClassicalError::Forbidden { .. } => CliError::Forbidden(e.to_string()),
            ClassicalError::Integration { .. } | ClassicalError::Drift { .. } => CliError::NonConvergence(e.to_string()),
            ClassicalError::Specfun(s) => s.into(),
            _ => CliError::Config(e.to_string()),
        }
    }
}

impl From<QuantumError> for CliError {
    fn from(e: QuantumError) -> Self {
        match e {
            QuantumError::Forbidden(_) => CliError::Forbidden(e.to_string()),
            QuantumError::Specfun(s) => s.into(),
            QuantumError::Classical(c) => c.into(),
            _ => CliError::Config(e.to_string()),
        }
    }
}

impl From<EmissionError> for CliError {
    fn from(e: EmissionError) -> Self {
        match e {
            EmissionError::Quadrature { .. } => CliError::NonConvergence(e.to_string()),
            _ => CliError::Config(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "standing-wave", version, about = "Charged scalar dynamics in counter-propagating circularly polarised waves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analytic trajectory with a Lorentz-integrator reference.
    Trajectory(CommonArgs),
    /// Floquet exponent of the Mathieu equation on a (λ, Q) grid.
    FloquetMap(CommonArgs),
    /// Effective mass sweep at the magnetic node for all models.
    Quasimomentum(CommonArgs),
    /// Nonlinear Compton harmonic spectrum.
    Compton(CommonArgs),
    /// Preset catalogue.
    Presets {
        #[command(subcommand)]
        action: PresetAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum PresetAction {
    /// Print every preset with its parameters.
    List,
}

#[derive(Debug, Args, Default)]
pub struct CommonArgs {
    /// Named parameter set, see `presets list`.
    #[arg(long)]
    pub preset: Option<String>,
    /// `key = value` file, one assignment per line, `#` comments.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Single assignment in the config-file syntax; repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    pub set: Vec<String>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub tol: Option<f64>,
    /// `csv` or `csv+svg`.
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long)]
    pub threads: Option<usize>,
}

/// Builds the configuration for `kind` from the layered sources.
pub fn resolve_config(kind: CommandKind, args: &CommonArgs) -> Result<RunConfig, CliError> {
    let mut cfg = RunConfig::defaults(kind);
    if let Some(name) = &args.preset {
        let p = find_preset(name).ok_or_else(|| CliError::Config(format!("unknown preset '{name}'")))?;
        if p.command != kind {
            return Err(CliError::Config(format!("preset '{name}' belongs to the {} command", p.command.name())));
        }
        cfg.apply_text(p.assignments)?;
        cfg.name = p.name.to_string();
    }
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        cfg.apply_text(&text)?;
    }
    for a in &args.set {
        let (k, v) = a.split_once('=').ok_or_else(|| CliError::Config(format!("--set expects KEY=VALUE, got '{a}'")))?;
        cfg.set(k.trim(), v.trim())?;
    }
    if let Some(out) = &args.out {
        cfg.out = out.clone();
    }
    if let Some(t) = args.tol {
        cfg.tol = Some(t);
    }
    if let Some(f) = &args.format {
        cfg.format = config::parse_format(f)?;
    }
    if let Some(n) = args.threads {
        cfg.threads = Some(n);
    }
    cfg.validate()?;
    Ok(cfg)
}

pub fn run_config(cfg: &RunConfig) -> Result<Report, CliError> {
    let go = || match cfg.command {
        CommandKind::Trajectory => cmd_trajectory(cfg),
        CommandKind::FloquetMap => cmd_floquet_map(cfg),
        CommandKind::Quasimomentum => cmd_quasimomentum(cfg),
        CommandKind::Compton => cmd_compton(cfg),
    };
    match cfg.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Config(e.to_string()))?
            .install(go),
        None => go(),
    }
}

pub fn presets_listing() -> String {
    let mut s = String::new();
    for p in PRESETS {
        s.push_str(&format!("{} ({}): {}\n", p.name, p.command.name(), p.description));
        for line in p.assignments.lines() {
            s.push_str(&format!("    {line}\n"));
        }
    }
    s
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let (kind, common) = match &cli.command {
        Command::Trajectory(a) => (CommandKind::Trajectory, a),
        Command::FloquetMap(a) => (CommandKind::FloquetMap, a),
        Command::Quasimomentum(a) => (CommandKind::Quasimomentum, a),
        Command::Compton(a) => (CommandKind::Compton, a),
        Command::Presets { action: PresetAction::List } => {
            print!("{}", presets_listing());
            return 0;
        }
    };
    let result = resolve_config(kind, common).and_then(|cfg| run_config(&cfg));
    match result {
        Ok(report) => {
            for l in &report.lines {
                println!("{l}");
            }
            for f in &report.files {
                println!("wrote {}", f.display());
            }
            match report.failure {
                Some(e) => {
                    eprintln!("error: {e}");
                    e.exit_code()
                }
                None => 0,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
