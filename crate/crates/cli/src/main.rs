use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

use lexc_cli::config::MODEL_KINDS;
use lexc_cli::{emit_report, exit_code, parse_config, run_checks, Format};
use lexc_core::linexp::MUTATIONS;
use lexc_core::models::algebra::preset_description;
use lexc_core::models::{DAY_PRESETS, PRESETS};

#[derive(Parser)]
#[command(name = "lexc", version, about = "Exhaustive checks for linear exponential comonads on finite models")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the checks selected by a config file.
    Check {
        #[arg(long)]
        config: PathBuf,
        /// Write the report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        format: Option<Format>,
        /// Corrupt one structure map before checking.
        #[arg(long)]
        mutate: Option<String>,
    },
    /// List model kinds and the comonads each supports.
    Models {
        #[command(subcommand)]
        cmd: List,
    },
    /// List named monoids, groups and Day bases.
    Presets {
        #[command(subcommand)]
        cmd: List,
    },
}

#[derive(Subcommand)]
enum List {
    List,
}

fn check(config: PathBuf, report: Option<PathBuf>, format: Option<Format>, mutate: Option<String>) -> anyhow::Result<u8> {
    let text = std::fs::read_to_string(&config).with_context(|| format!("reading {}", config.display()))?;
    let mut cfg = match parse_config(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{}: {e}", config.display());
            return Ok(2);
        }
    };
    if mutate.is_some() {
        cfg.mutate = mutate;
    }
    let run = match run_checks(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{}: {e}", config.display());
            return Ok(2);
        }
    };
    let out = emit_report(&run, format.unwrap_or(cfg.output.format));
    match report.or(cfg.output.report.clone()) {
        Some(path) => std::fs::write(&path, out).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{out}"),
    }
    Ok(exit_code(&run) as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Check { config, report, format, mutate } => match check(config, report, format, mutate) {
            Ok(code) => ExitCode::from(code),
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
        Cmd::Models { cmd: List::List } => {
            for (kind, about, routes) in MODEL_KINDS {
                println!("{kind:<14} {about} (comonad: {})", routes.join(", "));
            }
            println!("\nmutations: {}", MUTATIONS.map(|m| m.id()).join(", "));
            ExitCode::SUCCESS
        }
        Cmd::Presets { cmd: List::List } => {
            for p in PRESETS {
                println!("{p:<6} {}", preset_description(p));
            }
            println!("\nday bases: {}", DAY_PRESETS.join(", "));
            ExitCode::SUCCESS
        }
    }
}
