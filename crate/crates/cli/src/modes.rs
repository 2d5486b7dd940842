//! Per-mode computation. Grid points are evaluated in parallel; rows keep grid order.

use optomech_core::checks;
use optomech_core::composite::{max_friction_at, response_composite, scan_friction, temperature_at_max_friction};
use optomech_core::limits::{mmc_temperature, resonator_temperature};
use optomech_core::{response_single, Complex64, DriveFields, FrictionMaximum, Result};
use rayon::prelude::*;

use crate::config::{Mode, RunConfig};
use crate::table::{Cell, Table};

pub fn compute(config: &RunConfig) -> Result<Table> {
    let grid = config.grid.map(|g| g.points()).unwrap_or_default();
    match config.mode {
        Mode::SingleBs => single_bs(config, &grid),
        Mode::CompositeScan => composite_scan(config, &grid),
        Mode::MaxFrictionVsZeta => zeta_scan(config, &grid, &["zeta", "k0x_max", "beta_max"], false, |m| {
            vec![m.zeta.into(), m.k0x.into(), m.beta.into()]
        }),
        Mode::TemperatureVsZeta => zeta_scan(
            config,
            &grid,
            &["zeta", "k0x_max", "beta_max", "diffusion", "kBT", "kBT_round_trip", "kBT_resonator"],
            true,
            |m| {
                vec![
                    m.zeta.into(),
                    m.k0x.into(),
                    m.beta.into(),
                    m.diffusion.into(),
                    m.temperature.into(),
                    mmc_temperature(1.0, config.k0_l - m.k0x).into(),
                    resonator_temperature(m.zeta, config.k0_l).into(),
                ]
            },
        ),
        Mode::Figure4a => zeta_scan(config, &grid, &["zeta", "k0x_max"], false, |m| vec![m.zeta.into(), m.k0x.into()]),
        Mode::Figure4b => zeta_scan(config, &grid, &["zeta", "beta_max"], false, |m| vec![m.zeta.into(), m.beta.into()]),
        Mode::Figure5 => zeta_scan(config, &grid, &["zeta", "kBT"], true, |m| vec![m.zeta.into(), m.temperature.into()]),
        Mode::Figure3 => friction_profiles(config, &grid),
        Mode::LimitsCheck => limits_check(),
    }
}

fn single_bs(config: &RunConfig, grid: &[f64]) -> Result<Table> {
    let p = config.scatterer();
    let amplitude = Complex64::new(config.flux.sqrt(), 0.0);
    let mut t = Table::new(&["k0x", "force0", "beta", "diffusion", "kBT"]);
    t.rows = grid
        .par_iter()
        .map(|&x| {
            let r = response_single(&p, &DriveFields::standing_wave(amplitude, x, config.k));
            vec![x.into(), r.force0.into(), r.beta.into(), r.diffusion.into(), r.temperature.into()]
        })
        .collect();
    Ok(t)
}

fn composite_scan(config: &RunConfig, grid: &[f64]) -> Result<Table> {
    let spec = config.system();
    spec.validate()?;
    let mut t = Table::new(&["k0x", "force0", "beta", "diffusion", "kBT"]);
    t.rows = grid
        .par_iter()
        .map(|&x| {
            let r = response_composite(&spec.at(x))?;
            Ok(vec![x.into(), r.force0.into(), r.beta.into(), r.diffusion.into(), r.temperature.into()])
        })
        .collect::<Result<_>>()?;
    Ok(t)
}

/// Friction maximum per ζ. With `need_temperature` the diffusion regime is
/// required, so unsupported mirrors surface as regime errors.
fn zeta_scan<F>(config: &RunConfig, grid: &[f64], columns: &[&str], need_temperature: bool, row: F) -> Result<Table>
where
    F: Fn(&FrictionMaximum) -> Vec<Cell> + Sync,
{
    let template = config.system();
    template.validate()?;
    let mut t = Table::new(columns);
    t.rows = grid
        .par_iter()
        .map(|&z| {
            let m = if need_temperature {
                temperature_at_max_friction(&template.with_zeta(z))?
            } else {
                max_friction_at(z, &template)?
            };
            Ok(row(&m))
        })
        .collect::<Result<_>>()?;
    Ok(t)
}

fn friction_profiles(config: &RunConfig, grid: &[f64]) -> Result<Table> {
    let zetas = config.zetas.clone().unwrap_or_default();
    let template = config.system();
    template.validate()?;
    let curves: Vec<Vec<f64>> = zetas
        .par_iter()
        .map(|&z| Ok(scan_friction(&template.with_zeta(z), grid)?.into_iter().map(|s| s.beta).collect()))
        .collect::<Result<_>>()?;
    let mut columns = vec!["k0x".to_string()];
    for z in &zetas {
        columns.push(format!("beta_zeta_{z}"));
        columns.push(format!("beta_norm_zeta_{z}"));
    }
    let peaks: Vec<f64> = curves.iter().map(|c| c.iter().fold(0.0, |m: f64, b| m.max(b.abs()))).collect();
    let rows = grid
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let mut row = vec![Cell::Num(x)];
            for (c, &peak) in curves.iter().zip(&peaks) {
                row.push(c[i].into());
                row.push(if peak > 0.0 { (c[i] / peak).into() } else { Cell::Missing });
            }
            row
        })
        .collect();
    Ok(Table { columns, rows })
}

fn limits_check() -> Result<Table> {
    let mut t = Table::new(&["name", "metric", "tolerance", "passed", "detail"]);
    t.rows = checks::run_all()?
        .into_iter()
        .map(|o| {
            vec![Cell::Text(o.name), o.metric.into(), o.tolerance.into(), Cell::Bool(o.passed), Cell::Text(o.detail)]
        })
        .collect();
    Ok(t)
}

/// Whether a limits-check table reports any failure.
pub fn any_failed(table: &Table) -> bool {
    let Some(i) = table.columns.iter().position(|c| c == "passed") else {
        return false;
    };
    table.rows.iter().any(|r| r.get(i) == Some(&Cell::Bool(false)))
}
