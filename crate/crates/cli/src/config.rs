use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use ynoid_core::geometry::{GeometryError, SurfaceChoice, YNoidGeometry, DEFAULT_SCALE};
use ynoid_core::numeric_oracle::{FarCondition, OdeConfig};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "ynoid",
    version,
    about = "Morse index and nullity of Y-noid minimal surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Index and nullity of one surface.
    Index {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 64)]
        n_max: u32,
    },
    /// Steklov eigenvalues, beta and mode coefficients per face.
    Spectrum {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 8)]
        n_max: u32,
    },
    /// Index and nullity over a uniform grid of contact angles.
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        alpha_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        alpha_max: f64,
        #[arg(long)]
        steps: usize,
        /// Read the alpha bounds in degrees.
        #[arg(long)]
        degrees: bool,
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 64)]
        n_max: u32,
    },
    /// Check every closed-form quantity against the ODE oracle.
    Verify {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        #[command(flatten)]
        ode: OdeArgs,
    },
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("which").required(true).args(["surface", "alpha"])))]
pub struct SurfaceArgs {
    /// Named surface.
    #[arg(long, value_enum)]
    pub surface: Option<NamedSurface>,
    /// Contact angle of the first face, radians unless --degrees.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, requires = "alpha")]
    pub degrees: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NamedSurface {
    Ycatenoid,
    Pseudo,
    Pi6,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Junction circle radius.
    #[arg(long, default_value_t = DEFAULT_SCALE)]
    pub c: f64,
    #[arg(long, env = "YNOID_TOL", default_value_t = ynoid_core::DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OdeArgs {
    /// Truncation length of the shooting interval.
    #[arg(long = "ode-l", default_value_t = 30.0)]
    pub length: f64,
    /// RK4 step.
    #[arg(long = "ode-h", default_value_t = 1e-3)]
    pub step: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

impl SurfaceArgs {
    pub fn choice(&self) -> Result<SurfaceChoice, CliError> {
        match (self.surface, self.alpha) {
            (Some(NamedSurface::Ycatenoid), _) => Ok(SurfaceChoice::YCatenoid),
            (Some(NamedSurface::Pseudo), _) => Ok(SurfaceChoice::PseudoYCatenoid),
            (Some(NamedSurface::Pi6), _) => Ok(SurfaceChoice::PiOverSix),
            (None, Some(alpha)) => Ok(SurfaceChoice::Alpha(to_radians(alpha, self.degrees))),
            (None, None) => Err(CliError::Config(
                "one of --surface or --alpha is required".into(),
            )),
        }
    }

    pub fn build(&self, c: f64) -> Result<YNoidGeometry, CliError> {
        check_scale(c)?;
        self.choice()?.build(c).map_err(geometry_error)
    }
}

impl CommonArgs {
    pub fn validate(&self) -> Result<(), CliError> {
        check_scale(self.c)?;
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(CliError::Config(format!(
                "--tol must be positive, got {}",
                self.tol
            )));
        }
        Ok(())
    }
}

impl OdeArgs {
    pub fn config(&self) -> Result<OdeConfig, CliError> {
        let cfg = OdeConfig {
            length: self.length,
            step: self.step,
            far: FarCondition::DecayRobin,
        };
        cfg.validate()
            .map_err(|e| CliError::Config(format!("--ode-l/--ode-h: {e}")))?;
        Ok(cfg)
    }
}

pub fn to_radians(value: f64, degrees: bool) -> f64 {
    if degrees {
        value.to_radians()
    } else {
        value
    }
}

/// Uniform grid including both endpoints.
pub fn sweep_grid(alpha_min: f64, alpha_max: f64, steps: usize) -> Result<Vec<f64>, CliError> {
    if steps < 2 {
        return Err(CliError::Config(format!(
            "--steps must be at least 2, got {steps}"
        )));
    }
    if !(alpha_min.is_finite() && alpha_max.is_finite() && alpha_min < alpha_max) {
        return Err(CliError::Config(format!(
            "--alpha-min ({alpha_min}) must be below --alpha-max ({alpha_max})"
        )));
    }
    let last = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| alpha_min + (alpha_max - alpha_min) * i as f64 / last)
        .collect())
}

fn check_scale(c: f64) -> Result<(), CliError> {
    if c.is_finite() && c > 0.0 {
        Ok(())
    } else {
        Err(CliError::Config(format!("--c must be positive, got {c}")))
    }
}

fn geometry_error(e: GeometryError) -> CliError {
    match e {
        GeometryError::AlphaOutOfRange { .. } => CliError::Config(format!("--alpha: {e}")),
        GeometryError::InvalidScale { .. } => CliError::Config(format!("--c: {e}")),
        _ => CliError::Config(e.to_string()),
    }
}

pub fn build_alpha(alpha: f64, c: f64) -> Result<YNoidGeometry, CliError> {
    SurfaceChoice::Alpha(alpha).build(c).map_err(geometry_error)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_includes_endpoints() {
        let g = sweep_grid(0.1, 0.5, 5).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g[0], 0.1);
        assert_eq!(g[4], 0.5);
    }

    #[test]
    fn grid_rejects_bad_ranges() {
        assert!(sweep_grid(0.5, 0.1, 5).is_err());
        assert!(sweep_grid(0.1, 0.5, 1).is_err());
    }

    #[test]
    fn degrees_convert_once() {
        assert_eq!(to_radians(60.0, true), 60f64.to_radians());
        assert_eq!(to_radians(1.0, false), 1.0);
    }
}
