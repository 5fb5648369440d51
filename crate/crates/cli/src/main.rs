use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use solvsph_core::config::{JobConfig, OutputFormat};
use solvsph_core::presets::{preset, PRESETS};
use solvsph_core::report::{exit_code, run_check, run_semigroup, run_verify};
use solvsph_core::Error;

/// Sphericity and weight semigroups of solvable subgroups.
#[derive(Parser)]
#[command(name = "solvsph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a subgroup, test sphericity and list its active roots.
    Check(Input),
    /// Print the free generators of the extended weight semigroup.
    Semigroup(Input),
    /// Cross-check the generators against explicit representations.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Largest level of highest weights to enumerate.
        #[arg(long, env = "SOLVSPH_HEIGHT")]
        height: Option<u32>,
        /// Largest module dimension to construct.
        #[arg(long, env = "SOLVSPH_CAP")]
        cap: Option<u64>,
        /// Random trials for the open-orbit test.
        #[arg(long, env = "SOLVSPH_TRIALS")]
        trials: Option<usize>,
        /// Seed for the open-orbit test.
        #[arg(long, env = "SOLVSPH_SEED")]
        seed: Option<u64>,
    },
    /// Bundled example configurations.
    Presets {
        #[command(subcommand)]
        action: PresetAction,
    },
}

#[derive(Subcommand)]
enum PresetAction {
    List,
    /// Print a preset in the config file format.
    Show { name: String },
}

#[derive(Args)]
struct Input {
    /// Config file (line format or JSON).
    #[arg(required_unless_present = "preset", conflicts_with = "preset")]
    file: Option<PathBuf>,
    /// Preset name, optionally with a group such as `borel:B3`.
    #[arg(long)]
    preset: Option<String>,
    /// Emit JSON.
    #[arg(long, env = "SOLVSPH_JSON")]
    json: bool,
}

impl Input {
    fn load(&self) -> anyhow::Result<JobConfig> {
        let mut cfg = match (&self.file, &self.preset) {
            (_, Some(p)) => preset(p)?,
            (Some(f), None) => {
                let text = std::fs::read_to_string(f).with_context(|| format!("reading {}", f.display()))?;
                JobConfig::load(&text).with_context(|| f.display().to_string())?
            }
            (None, None) => bail!("give a config file or --preset"),
        };
        if self.json {
            cfg.options.format = OutputFormat::Json;
        }
        Ok(cfg)
    }
}

fn emit<T: Serialize + std::fmt::Display>(report: &T, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(report).expect("reports serialize")),
        OutputFormat::Text => print!("{report}"),
    }
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Check(input) => {
            let cfg = input.load()?;
            let r = run_check(&cfg)?;
            emit(&r, cfg.options.format);
            Ok(r.exit_code())
        }
        Command::Semigroup(input) => {
            let cfg = input.load()?;
            let r = run_semigroup(&cfg)?;
            emit(&r, cfg.options.format);
            Ok(if r.free { 0 } else { 1 })
        }
        Command::Verify { input, height, cap, trials, seed } => {
            let mut cfg = input.load()?;
            let o = &mut cfg.options;
            o.height_bound = height.unwrap_or(o.height_bound);
            o.dim_cap = cap.unwrap_or(o.dim_cap);
            o.trials = trials.unwrap_or(o.trials);
            o.seed = seed.unwrap_or(o.seed);
            let r = run_verify(&cfg)?;
            emit(&r, cfg.options.format);
            Ok(r.exit_code())
        }
        Command::Presets { action: PresetAction::List } => {
            for p in PRESETS {
                let suffix = if p.parameterized { "[:GROUP]" } else { "" };
                println!("{:<26} {}", format!("{}{suffix}", p.name), p.description);
            }
            Ok(0)
        }
        Command::Presets { action: PresetAction::Show { name } } => {
            print!("{}", preset(&name)?.to_text());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = e.downcast_ref::<Error>().map_or(2, exit_code);
            ExitCode::from(code as u8)
        }
    }
}
