//! Browser bindings for the Y-noid index engine.
//!
//! Every export returns a JSON string. The `*_json` functions hold the logic
//! and run natively so they can be tested without a browser.

use std::f64::consts::FRAC_PI_3;

use serde::Serialize;
use wasm_bindgen::prelude::*;
use ynoid_core::closed_spectrum::spectrum_table;
use ynoid_core::geometry::{build_ynoid, FaceKind, SurfaceChoice, YNoidGeometry};
use ynoid_core::index_engine::{total_index, IndexReport, DEFAULT_N_MAX, DEFAULT_TOL};

/// Profiles are drawn out to this multiple of the junction radius.
const VIEW_RADII: f64 = 3.0;
const PROFILE_POINTS: usize = 160;

#[derive(Serialize)]
struct Profile {
    face: usize,
    kind: &'static str,
    /// Meridian points `(r, z)`.
    points: Vec<[f64; 2]>,
}

#[derive(Serialize)]
struct Analysis<'a> {
    geometry: &'a YNoidGeometry,
    profiles: Vec<Profile>,
    report: &'a IndexReport,
}

#[derive(Serialize)]
struct SpectrumEntry {
    n: u32,
    face: usize,
    delta: Option<f64>,
    coefficient: Option<f64>,
}

#[derive(Serialize)]
struct SweepPoint {
    alpha: f64,
    total_index: u32,
    total_nullity: u32,
    fixed_boundary: [u32; 3],
    z_index: u32,
    z_nullity: u32,
}

fn geometry(surface: &str, c: f64) -> Result<YNoidGeometry, String> {
    let choice: SurfaceChoice = surface
        .parse()
        .map_err(|e: ynoid_core::GeometryError| e.to_string())?;
    choice.build(c).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

fn profile(index: usize, kind: &FaceKind, c: f64) -> Profile {
    let reach = VIEW_RADII * c;
    let last = (PROFILE_POINTS - 1) as f64;
    match *kind {
        FaceKind::Catenoidal {
            offset,
            scale,
            axial,
        } => {
            // r = scale cosh(t + T) reaches `reach` at t_end.
            let t_end = (reach / scale).acosh() - offset;
            let points = (0..PROFILE_POINTS)
                .map(|i| {
                    let t = t_end * i as f64 / last;
                    [scale * (t + offset).cosh(), axial.sign() * scale * t]
                })
                .collect();
            Profile {
                face: index + 1,
                kind: "catenoidal",
                points,
            }
        }
        FaceKind::Disk { radius } => Profile {
            face: index + 1,
            kind: "disk",
            points: vec![[radius, 0.0], [0.0, 0.0]],
        },
        FaceKind::PlaneComplement { radius } => Profile {
            face: index + 1,
            kind: "plane_complement",
            points: vec![[radius, 0.0], [reach, 0.0]],
        },
    }
}

/// Geometry, meridian profiles and index report of one surface.
///
/// `surface` is `ycatenoid`, `pseudo`, `pi6` or a contact angle in radians.
pub fn analyze_json(surface: &str, c: f64) -> Result<String, String> {
    let g = geometry(surface, c)?;
    let report = total_index(&g, DEFAULT_N_MAX, DEFAULT_TOL).map_err(|e| e.to_string())?;
    let profiles = g
        .faces
        .iter()
        .enumerate()
        .map(|(i, f)| profile(i, &f.kind, g.c))
        .collect();
    to_json(&Analysis {
        geometry: &g,
        profiles,
        report: &report,
    })
}

/// Steklov eigenvalues and mode coefficients `c (delta - beta)` for `n <= n_max`.
pub fn spectrum_json(surface: &str, c: f64, n_max: u32) -> Result<String, String> {
    let g = geometry(surface, c)?;
    let mut entries = Vec::new();
    for mode in spectrum_table(&g, n_max) {
        for (i, (face, fd)) in g.faces.iter().zip(&mode.faces).enumerate() {
            let delta = fd.delta.value();
            entries.push(SpectrumEntry {
                n: mode.n,
                face: i + 1,
                delta,
                coefficient: delta.map(|d| g.c * (d - face.beta)),
            });
        }
    }
    to_json(&entries)
}

/// Index and nullity at `alpha = (pi/3) k / steps`, `k = 1..=steps`.
pub fn sweep_json(steps: u32, c: f64) -> Result<String, String> {
    if steps == 0 {
        return Err("steps must be positive".into());
    }
    let points = (1..=steps)
        .map(|k| {
            let alpha = FRAC_PI_3 * f64::from(k) / f64::from(steps);
            let g = build_ynoid(alpha, c).map_err(|e| e.to_string())?;
            let r = total_index(&g, DEFAULT_N_MAX, DEFAULT_TOL).map_err(|e| e.to_string())?;
            Ok(SweepPoint {
                alpha,
                total_index: r.total_index,
                total_nullity: r.total_nullity,
                fixed_boundary: r.fixed_boundary,
                z_index: r.z_contrib.index,
                z_nullity: r.z_contrib.nullity,
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    to_json(&points)
}

#[wasm_bindgen]
pub fn analyze(surface: &str, c: f64) -> Result<String, JsValue> {
    analyze_json(surface, c).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn spectrum(surface: &str, c: f64, n_max: u32) -> Result<String, JsValue> {
    spectrum_json(surface, c, n_max).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn sweep(steps: u32, c: f64) -> Result<String, JsValue> {
    sweep_json(steps, c).map_err(|e| JsValue::from_str(&e))
}
