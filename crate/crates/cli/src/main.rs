use std::path::PathBuf;
use std::process::ExitCode;

use belief_decision::sensitivity::DEFAULT_RESOLUTION;
use belief_decision::Rho;
use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod report;

/// Decision analysis with belief functions.
#[derive(Debug, Parser)]
#[command(name = "beldec", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expected value interval of a mass function.
    Evi {
        /// Mass-function document.
        file: PathBuf,
        /// Cooperation probability; also prints the induced distribution.
        #[arg(long, value_parser = parse_rho)]
        rho: Option<Rho>,
        /// Also print the pignistic and proportional point values.
        #[arg(long)]
        transforms: bool,
    },
    /// Evaluate a decision problem at a given rho.
    Evaluate {
        /// Problem document.
        file: PathBuf,
        #[arg(long, value_parser = parse_rho)]
        rho: Rho,
    },
    /// Regions of rho with a constant optimal strategy.
    Sensitivity {
        /// Problem document.
        file: PathBuf,
        /// Number of grid points before bisection.
        #[arg(long, default_value_t = DEFAULT_RESOLUTION as u64,
              value_parser = clap::value_parser!(u64).range(2..))]
        resolution: u64,
    },
    /// Compare analytic results with enumeration and simulation.
    Oracle {
        /// Mass-function or problem document.
        file: PathBuf,
        #[arg(long, value_parser = parse_rho)]
        rho: Rho,
        /// Monte Carlo sample count.
        #[arg(long, default_value_t = 100_000,
              value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_rho(text: &str) -> Result<Rho, String> {
    let value: f64 = text.parse().map_err(|e| format!("{e}"))?;
    Rho::new(value).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match commands::run(&cli.command, argv) {
        Ok(report) => {
            match cli.format {
                Format::Table => print!("{}", report.table),
                Format::Json => println!("{}", report.document.to_json()),
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
