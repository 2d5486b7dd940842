//! Run configuration: a single JSON document, with top-level scalar fields
//! overridable from the command line.

use std::f64::consts::PI;

use optomech_core::{Complex64, Polarizability, SystemSpec};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Single scatterer in a standing wave, scanned over position.
    SingleBs,
    /// Scatterer in front of the mirror, scanned over position.
    CompositeScan,
    MaxFrictionVsZeta,
    TemperatureVsZeta,
    LimitsCheck,
    /// Normalized friction profiles for several ζ.
    #[serde(rename = "figure-3")]
    Figure3,
    /// Position of the friction maximum against ζ.
    #[serde(rename = "figure-4a")]
    Figure4a,
    /// Maximal friction against ζ.
    #[serde(rename = "figure-4b")]
    Figure4b,
    /// Temperature at the friction maximum against ζ.
    #[serde(rename = "figure-5")]
    Figure5,
}

impl Mode {
    /// Whether the mode sweeps ζ (otherwise it sweeps `k₀x`, or nothing).
    pub fn sweeps_zeta(self) -> bool {
        matches!(
            self,
            Mode::MaxFrictionVsZeta | Mode::TemperatureVsZeta | Mode::Figure4a | Mode::Figure4b | Mode::Figure5
        )
    }

    pub fn uses_grid(self) -> bool {
        self != Mode::LimitsCheck
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    #[serde(default = "default_spacing")]
    pub spacing: Spacing,
}

fn default_spacing() -> Spacing {
    Spacing::Linear
}

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        match self.spacing {
            Spacing::Linear => optomech_core::search::linspace(self.start, self.stop, self.count),
            Spacing::Log => optomech_core::search::logspace(self.start, self.stop, self.count),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Output {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
}

/// Everything a run needs. Field names double as override flag names.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub mode: Mode,
    /// Real part of ζ for fixed-ζ modes.
    #[serde(default = "default_zeta")]
    pub zeta: f64,
    #[serde(default)]
    pub zeta_im: f64,
    /// Mirror amplitude reflectivity as `[re, im]`.
    #[serde(default = "default_mirror")]
    pub r_fixed: Complex64,
    #[serde(default = "default_k0_l")]
    pub k0_l: f64,
    /// Position for modes that do not scan it.
    #[serde(default = "default_k0x")]
    pub k0x: f64,
    #[serde(default = "default_flux")]
    pub flux: f64,
    /// Pump wavenumber for the single-scatterer mode.
    #[serde(default = "default_k")]
    pub k: f64,
    /// Scatterer velocity `v/c`, only used for the validity warning.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub velocity: Option<f64>,
    /// Scatterer model for the single-scatterer mode; constant ζ if absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polarizability: Option<Polarizability>,
    /// Curves of the friction-profile figure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zetas: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<Grid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<Output>,
}

fn default_zeta() -> f64 {
    1.0
}
fn default_mirror() -> Complex64 {
    Complex64::new(-1.0, 0.0)
}
fn default_k0_l() -> f64 {
    100.0
}
fn default_k0x() -> f64 {
    0.5 * PI
}
fn default_flux() -> f64 {
    1.0
}
fn default_k() -> f64 {
    1.0
}

pub const FIGURE3_ZETAS: [f64; 4] = [0.01, 0.1, 0.3, 1.0];

/// Reads a config, applies overrides, and fills in mode defaults.
pub fn parse(text: &str, overrides: &[(&str, Value)]) -> Result<RunConfig, CliError> {
    let mut value: Value = serde_json::from_str(text).map_err(|e| CliError::Config {
        path: ".".into(),
        message: e.to_string(),
    })?;
    if !overrides.is_empty() {
        let obj = value.as_object_mut().ok_or_else(|| CliError::Config {
            path: ".".into(),
            message: "config must be a JSON object".into(),
        })?;
        for (name, v) in overrides {
            obj.insert((*name).to_string(), v.clone());
        }
    }
    let config: RunConfig = serde_path_to_error::deserialize(value).map_err(|e| CliError::Config {
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })?;
    let config = config.resolved();
    config.validate()?;
    Ok(config)
}

impl RunConfig {
    /// Fills in the grid and curve list each figure mode uses by default.
    pub fn resolved(mut self) -> Self {
        if self.grid.is_none() && self.mode.uses_grid() {
            self.grid = Some(match self.mode {
                Mode::Figure4a | Mode::Figure5 => Grid { start: 1e-2, stop: 1e2, count: 25, spacing: Spacing::Log },
                Mode::Figure4b => Grid { start: 1e-3, stop: 1e2, count: 31, spacing: Spacing::Log },
                m if m.sweeps_zeta() => Grid { start: 1e-2, stop: 1e2, count: 25, spacing: Spacing::Log },
                _ => Grid { start: PI / 512.0, stop: PI, count: 512, spacing: Spacing::Linear },
            });
        }
        if self.mode == Mode::Figure3 && self.zetas.is_none() {
            self.zetas = Some(FIGURE3_ZETAS.to_vec());
        }
        self
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |path: &str, message: String| Err(CliError::Config { path: path.into(), message });
        for (name, v) in [("zeta", self.zeta), ("zeta_im", self.zeta_im), ("k0_l", self.k0_l), ("k0x", self.k0x)] {
            if !v.is_finite() {
                return bad(name, format!("must be finite, got {v}"));
            }
        }
        if !(self.flux >= 0.0 && self.flux.is_finite()) {
            return bad("flux", format!("must be finite and non-negative, got {}", self.flux));
        }
        if !(self.k > 0.0 && self.k.is_finite()) {
            return bad("k", format!("must be positive, got {}", self.k));
        }
        if !(self.r_fixed.norm() <= 1.0 + 1e-12) {
            return bad("r_fixed", format!("|r_fixed| must not exceed 1, got {}", self.r_fixed.norm()));
        }
        if let Some(g) = &self.grid {
            if g.count < 2 {
                return bad("grid.count", format!("scans need at least 2 points, got {}", g.count));
            }
            if !(g.start.is_finite() && g.stop.is_finite()) {
                return bad("grid", "bounds must be finite".into());
            }
            if g.spacing == Spacing::Log && !(g.start > 0.0 && g.stop > 0.0) {
                return bad("grid.spacing", "log spacing requires positive start and stop".into());
            }
            if self.mode.sweeps_zeta() && !(g.start > 0.0 && g.stop > 0.0) {
                return bad("grid.start", "zeta grids must be positive".into());
            }
        }
        if let Some(zs) = &self.zetas {
            if let Some((i, z)) = zs.iter().enumerate().find(|(_, z)| !(**z > 0.0 && z.is_finite())) {
                return bad(&format!("zetas[{i}]"), format!("must be positive, got {z}"));
            }
        }
        Ok(())
    }

    pub fn system(&self) -> SystemSpec {
        SystemSpec {
            zeta: Complex64::new(self.zeta, self.zeta_im),
            r_fixed: self.r_fixed,
            k0_l: self.k0_l,
            k0x: self.k0x,
            flux: self.flux,
        }
    }

    pub fn scatterer(&self) -> Polarizability {
        self.polarizability.unwrap_or_else(|| Polarizability::constant(Complex64::new(self.zeta, self.zeta_im)))
    }

    /// Time-averaging needs the round-trip Doppler phase `(v/c)·k₀L` to stay small.
    pub fn validity_warning(&self) -> Option<String> {
        let v = self.velocity?;
        let phase = (v * self.k0_l).abs();
        (phase > 0.1).then(|| {
            format!("warning: velocity * k0_l = {phase:.3e} exceeds 0.1; first-order results may not apply")
        })
    }
}
