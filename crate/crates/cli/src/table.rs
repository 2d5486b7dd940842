//! Result tables and their CSV / JSON renderings.

use std::io::Write;

use serde::ser::{Serialize, Serializer};
use serde_json::json;

use crate::config::RunConfig;

pub const UNITS: &str = "hbar = c = 1, k0 = 1; force in hbar*k0*flux, friction beta in hbar*k0^2*flux/c, \
diffusion in (hbar*k0)^2*flux, temperature kBT in hbar*c*k0, positions as k0*x";

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
    Bool(bool),
    Missing,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Missing, Cell::Num)
    }
}

impl Cell {
    /// 17 significant digits, so every value survives a text round trip.
    fn csv(&self) -> String {
        match self {
            Cell::Num(v) if v.is_finite() => format!("{v:.16e}"),
            Cell::Num(_) | Cell::Missing => "nan".into(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Num(v) if v.is_finite() => s.serialize_f64(*v),
            Cell::Num(_) | Cell::Missing => s.serialize_none(),
            Cell::Text(t) => s.serialize_str(t),
            Cell::Bool(b) => s.serialize_bool(*b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }
}

fn config_json(config: &RunConfig) -> String {
    serde_json::to_string(config).expect("config serializes")
}

pub fn write_csv<W: Write>(out: W, config: &RunConfig, table: &Table) -> std::io::Result<()> {
    let mut out = out;
    writeln!(out, "# optomech {}", optomech_core::VERSION)?;
    writeln!(out, "# config: {}", config_json(config))?;
    writeln!(out, "# units: {UNITS}")?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&table.columns)?;
    for row in &table.rows {
        w.write_record(row.iter().map(Cell::csv))?;
    }
    w.flush()
}

pub fn write_json<W: Write>(mut out: W, config: &RunConfig, table: &Table) -> std::io::Result<()> {
    let doc = json!({
        "meta": { "tool": "optomech", "version": optomech_core::VERSION, "units": UNITS },
        "config": config,
        "columns": table.columns,
        "rows": table.rows,
    });
    serde_json::to_writer_pretty(&mut out, &doc)?;
    writeln!(out)
}
