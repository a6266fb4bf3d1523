mod config;
mod output;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;
use ynoid_core::closed_spectrum::spectrum_table;
use ynoid_core::index_engine::{total_index, IndexError};
use ynoid_core::numeric_oracle::{verify_all, OracleError};

use config::{Cli, Command};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{0}")]
    Index(#[from] IndexError),
    #[error("oracle failure: {0}")]
    Oracle(#[from] OracleError),
    #[error("verification failed")]
    VerificationFailed,
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Oracle(OracleError::InvalidConfig(_)) => 2,
            CliError::VerificationFailed => 3,
            CliError::Index(IndexError::NonConvergence { .. }) => 4,
            _ => 1,
        }
    }
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Index {
            surface,
            common,
            n_max,
        } => {
            common.validate()?;
            let g = surface.build(common.c)?;
            let report = total_index(&g, n_max, common.tol)?;
            emit(
                &output::index(&g, &report, common.format)?,
                common.out.as_deref(),
            )
        }
        Command::Spectrum {
            surface,
            common,
            n_max,
        } => {
            common.validate()?;
            let g = surface.build(common.c)?;
            let table = spectrum_table(&g, n_max);
            emit(
                &output::spectrum(&g, &table, common.format)?,
                common.out.as_deref(),
            )
        }
        Command::Sweep {
            alpha_min,
            alpha_max,
            steps,
            degrees,
            common,
            n_max,
        } => {
            common.validate()?;
            let grid = config::sweep_grid(
                config::to_radians(alpha_min, degrees),
                config::to_radians(alpha_max, degrees),
                steps,
            )?;
            let rows = grid
                .iter()
                .map(|&alpha| {
                    let g = config::build_alpha(alpha, common.c)?;
                    let report = total_index(&g, n_max, common.tol)?;
                    Ok(output::SweepRow::new(alpha, &report))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            emit(&output::sweep(&rows, common.format)?, common.out.as_deref())
        }
        Command::Verify {
            surface,
            common,
            n_max,
            ode,
        } => {
            common.validate()?;
            let cfg = ode.config()?;
            let g = surface.build(common.c)?;
            let report = verify_all(&g, n_max, &cfg)?;
            emit(
                &output::verify(&g, &report, common.format)?,
                common.out.as_deref(),
            )?;
            if report.passed {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ynoid: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
