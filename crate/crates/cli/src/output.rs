//! Rendering of reports as tables, CSV and JSON.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use ynoid_core::closed_spectrum::SteklovMode;
use ynoid_core::geometry::{FaceKind, YNoidGeometry};
use ynoid_core::index_engine::IndexReport;
use ynoid_core::numeric_oracle::VerificationReport;

use crate::config::Format;
use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// Round to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn round_floats(value: &mut Value) {
    match value {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                *value = json!(round_sig(x));
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

fn to_json<T: Serialize>(item: &T) -> Value {
    let mut value = serde_json::to_value(item).expect("report types serialize");
    round_floats(&mut value);
    value
}

fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

fn render_csv<T: Serialize>(rows: &[T]) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn surface_json(g: &YNoidGeometry) -> Value {
    json!({
        "tag": g.tag.to_string(),
        "alpha": g.alpha,
        "c": g.c,
        "faces": to_json(&g.faces),
    })
}

#[derive(Debug, Serialize)]
pub struct SweepRow {
    pub alpha_rad: f64,
    pub total_index: u32,
    pub total_nullity: u32,
    pub ind0_f1: u32,
    pub ind0_f2: u32,
    pub ind0_f3: u32,
    pub steklov_index: u32,
    pub z_index: u32,
    pub z_nullity: u32,
    pub n_cutoff: u32,
}

impl SweepRow {
    pub fn new(alpha: f64, r: &IndexReport) -> Self {
        Self {
            alpha_rad: round_sig(alpha),
            total_index: r.total_index,
            total_nullity: r.total_nullity,
            ind0_f1: r.fixed_boundary[0],
            ind0_f2: r.fixed_boundary[1],
            ind0_f3: r.fixed_boundary[2],
            steklov_index: r.steklov_total,
            z_index: r.z_contrib.index,
            z_nullity: r.z_contrib.nullity,
            n_cutoff: r.n_cutoff,
        }
    }
}

pub fn index(g: &YNoidGeometry, r: &IndexReport, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let mut value = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "index",
                "surface": surface_json(g),
                "total_index": r.total_index,
                "total_nullity": r.total_nullity,
                "fixed_boundary": r.fixed_boundary,
                "steklov_total": r.steklov_total,
                "z_contribution": to_json(&r.z_contrib),
                "n_cutoff": r.n_cutoff,
                "modes": to_json(&r.mode_table),
            });
            round_floats(&mut value);
            Ok(render_json(&value))
        }
        Format::Csv => render_csv(&[SweepRow::new(g.alpha, r)]),
        Format::Table => {
            let mut s = String::new();
            surface_table(&mut s, g);
            let _ = writeln!(s, "index    {}", r.total_index);
            let _ = writeln!(s, "nullity  {}", r.total_nullity);
            let _ = writeln!(
                s,
                "fixed boundary  {:?}  steklov {}  Z ({}, {})  cutoff n = {}",
                r.fixed_boundary,
                r.steklov_total,
                r.z_contrib.index,
                r.z_contrib.nullity,
                r.n_cutoff
            );
            let _ = writeln!(
                s,
                "\n   n  mult  {:>14} {:>14} {:>14}  (-, 0, +)",
                "a1", "a2", "a3"
            );
            for m in &r.mode_table {
                let _ = writeln!(
                    s,
                    "{:>4}  {:>4}  {:>14.9} {:>14.9} {:>14.9}  ({}, {}, {})",
                    m.n,
                    m.multiplicity,
                    m.coefficients[0],
                    m.coefficients[1],
                    m.coefficients[2],
                    m.inertia.negative,
                    m.inertia.zero,
                    m.inertia.positive
                );
            }
            Ok(s)
        }
    }
}

fn surface_table(s: &mut String, g: &YNoidGeometry) {
    let _ = writeln!(
        s,
        "surface  {}  alpha = {:.12}  c = {:.12}",
        g.tag, g.alpha, g.c
    );
    for (i, f) in g.faces.iter().enumerate() {
        let kind = match f.kind {
            FaceKind::Catenoidal { offset, .. } => format!("catenoidal T = {offset:.9}"),
            FaceKind::Disk { .. } => "disk".to_string(),
            FaceKind::PlaneComplement { .. } => "plane complement".to_string(),
        };
        let _ = writeln!(
            s,
            "  face {}  {:<28} angle {:>12.9}  beta {:>12.9}  {:?}",
            i + 1,
            kind,
            f.contact_angle,
            f.beta,
            f.classification
        );
    }
}

#[derive(Debug, Serialize)]
struct SpectrumRow {
    n: u32,
    multiplicity: u32,
    face: usize,
    delta: Option<f64>,
    beta: f64,
    coefficient: Option<f64>,
}

fn spectrum_rows(g: &YNoidGeometry, table: &[SteklovMode]) -> Vec<SpectrumRow> {
    let mut rows = Vec::new();
    for mode in table {
        for (i, (face, fd)) in g.faces.iter().zip(&mode.faces).enumerate() {
            let delta = fd.delta.value();
            rows.push(SpectrumRow {
                n: mode.n,
                multiplicity: mode.multiplicity,
                face: i + 1,
                delta: delta.map(round_sig),
                beta: round_sig(face.beta),
                coefficient: delta.map(|d| round_sig(g.c * (d - face.beta))),
            });
        }
    }
    rows
}

pub fn spectrum(
    g: &YNoidGeometry,
    table: &[SteklovMode],
    format: Format,
) -> Result<String, CliError> {
    let rows = spectrum_rows(g, table);
    match format {
        Format::Csv => render_csv(&rows),
        Format::Json => {
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "spectrum",
                "surface": surface_json(g),
                "rows": to_json(&rows),
            });
            Ok(render_json(&value))
        }
        Format::Table => {
            let mut s = String::new();
            surface_table(&mut s, g);
            let _ = writeln!(
                s,
                "\n   n  face  {:>16} {:>16} {:>16}",
                "delta", "beta", "c(delta-beta)"
            );
            for r in &rows {
                let show = |v: Option<f64>| v.map_or("kernel".to_string(), |x| format!("{x:.9}"));
                let _ = writeln!(
                    s,
                    "{:>4}  {:>4}  {:>16} {:>16.9} {:>16}",
                    r.n,
                    r.face,
                    show(r.delta),
                    r.beta,
                    show(r.coefficient)
                );
            }
            Ok(s)
        }
    }
}

pub fn sweep(rows: &[SweepRow], format: Format) -> Result<String, CliError> {
    match format {
        Format::Csv => render_csv(rows),
        Format::Json => {
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "sweep",
                "rows": to_json(&rows),
            });
            Ok(render_json(&value))
        }
        Format::Table => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{:>16}  index  nullity  Ind0     steklov  Z       cutoff",
                "alpha"
            );
            for r in rows {
                let _ = writeln!(
                    s,
                    "{:>16.12}  {:>5}  {:>7}  ({},{},{})  {:>7}  ({},{})   {:>6}",
                    r.alpha_rad,
                    r.total_index,
                    r.total_nullity,
                    r.ind0_f1,
                    r.ind0_f2,
                    r.ind0_f3,
                    r.steklov_index,
                    r.z_index,
                    r.z_nullity,
                    r.n_cutoff
                );
            }
            Ok(s)
        }
    }
}

#[derive(Debug, Serialize)]
struct VerifyRow {
    n: u32,
    face: usize,
    delta_closed: Option<f64>,
    delta_numeric: Option<f64>,
    rel_error: f64,
    passed: bool,
}

pub fn verify(
    g: &YNoidGeometry,
    report: &VerificationReport,
    format: Format,
) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "verify",
                "surface": surface_json(g),
                "passed": report.passed,
                "worst_rel_error": report.worst_rel_error,
                "report": to_json(report),
            });
            Ok(render_json(&value))
        }
        Format::Csv => {
            let rows: Vec<VerifyRow> = report
                .spectral_rows
                .iter()
                .map(|r| VerifyRow {
                    n: r.n,
                    face: r.face,
                    delta_closed: r.delta_closed.map(round_sig),
                    delta_numeric: r.delta_numeric.map(round_sig),
                    rel_error: round_sig(r.rel_error),
                    passed: r.passed,
                })
                .collect();
            render_csv(&rows)
        }
        Format::Table => {
            let mut s = String::new();
            surface_table(&mut s, g);
            let _ = writeln!(
                s,
                "\nspectral rows     {} (worst relative error {:.3e}, tolerance {:.0e})",
                report.spectral_rows.len(),
                report.worst_rel_error,
                report.rel_tolerance
            );
            for r in &report.fixed_rows {
                let _ = writeln!(
                    s,
                    "face {} fixed-boundary index  closed {}  oscillation {}",
                    r.face, r.count_closed, r.count_numeric
                );
            }
            let _ = writeln!(
                s,
                "inertia samples   {} compared, {} agreed, {} in degenerate band",
                report.inertia.compared, report.inertia.agreed, report.inertia.skipped
            );
            for f in &report.failures {
                let _ = writeln!(s, "FAILURE {f}");
            }
            let _ = writeln!(s, "{}", if report.passed { "PASSED" } else { "FAILED" });
            Ok(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(round_sig(2.0 / 3.0), 0.666666666667);
        assert_eq!(round_sig(-1.0e-20 / 3.0), -3.33333333333e-21);
        assert_eq!(round_sig(0.0), 0.0);
    }

    #[test]
    fn nested_floats_are_rounded() {
        let mut v = json!({"a": [1.0 / 3.0, 2], "b": {"c": 2.0 / 3.0}});
        round_floats(&mut v);
        assert_eq!(
            v,
            json!({"a": [0.333333333333, 2], "b": {"c": 0.666666666667}})
        );
    }
}
