//! Construction of the Y-noid family.
//!
//! A Y-noid is three minimal faces glued along a horizontal circle of radius
//! `c` with their conormals at mutual 120 degree angles. Face `i` leaves the
//! junction along the meridian direction `(-cos a_i, sin a_i)` in
//! `(radial, vertical)` coordinates. Away from the planar limits it is a piece
//! of the catenoid
//!
//! ```text
//! X(t, theta) = c_i (cosh(t + T_i) cos theta, cosh(t + T_i) sin theta, +-t),  t >= 0,
//! ```
//!
//! with `cos a_i = -tanh T_i` and `c_i cosh T_i = c`.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_6, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Window for recognising the special parameters pi/3 and pi/6.
pub const ANGLE_EPS: f64 = 1e-9;
/// Window on `|cos a_i|` beyond which a face is taken to be planar.
pub const PLANAR_EPS: f64 = 1e-12;
/// Offsets with `|T| < OFFSET_EPS` sit on the catenoid neck (vertical at the junction).
pub const OFFSET_EPS: f64 = 1e-9;
/// Junction radius `2/sqrt(3)`: the catenoidal faces of both the Y-catenoid
/// and the pseudo Y-catenoid then have unit scale.
pub const DEFAULT_SCALE: f64 = 1.154_700_538_379_251_7;

const TWO_PI_3: f64 = 2.0 * PI / 3.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("contact angle alpha = {alpha} rad is outside the valid interval (0, pi/3]")]
    AlphaOutOfRange { alpha: f64 },
    #[error("junction radius c = {c} must be positive and finite")]
    InvalidScale { c: f64 },
    #[error(
        "alpha = {alpha} rad is too close to 0: face 1 degenerates to a disk; \
         build the Y-catenoid explicitly instead"
    )]
    DegenerateFace { alpha: f64 },
    #[error("unknown surface '{0}' (expected ycatenoid, pseudo, pi6 or an angle)")]
    UnknownSurface(String),
}

/// Direction of the catenoidal end along the rotation axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxialSign {
    Up,
    Down,
}

impl AxialSign {
    pub fn sign(self) -> f64 {
        match self {
            AxialSign::Up => 1.0,
            AxialSign::Down => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FaceKind {
    /// Catenoidal end with offset `T` and scale `c_i`; `c_i cosh T` is the junction radius.
    Catenoidal {
        offset: f64,
        scale: f64,
        axial: AxialSign,
    },
    /// Flat disk bounded by the junction circle.
    Disk { radius: f64 },
    /// Horizontal plane with the junction disk removed.
    PlaneComplement { radius: f64 },
}

impl FaceKind {
    pub fn is_planar(&self) -> bool {
        !matches!(self, FaceKind::Catenoidal { .. })
    }

    pub fn offset(&self) -> Option<f64> {
        match *self {
            FaceKind::Catenoidal { offset, .. } => Some(offset),
            _ => None,
        }
    }

    /// Radius of the circle along which the face meets the junction.
    pub fn junction_radius(&self) -> f64 {
        match *self {
            FaceKind::Catenoidal { offset, scale, .. } => scale * offset.cosh(),
            FaceKind::Disk { radius } | FaceKind::PlaneComplement { radius } => radius,
        }
    }
}

/// Graphicality of a face over the horizontal plane, read off the sign of `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Graphical,
    NonGraphical,
    Planar,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FaceSpec {
    pub kind: FaceKind,
    /// Contact angle `a_i` in radians.
    pub contact_angle: f64,
    /// `beta_i = <H_Gamma, eta_i> = -cos(a_i) / c`, an inverse length.
    pub beta: f64,
    pub classification: Classification,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceTag {
    Generic,
    YCatenoid,
    PseudoYCatenoid,
    PiOverSix,
}

impl fmt::Display for SurfaceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SurfaceTag::Generic => "generic",
            SurfaceTag::YCatenoid => "y_catenoid",
            SurfaceTag::PseudoYCatenoid => "pseudo_y_catenoid",
            SurfaceTag::PiOverSix => "pi_over_six",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct YNoidGeometry {
    /// Family parameter; 0 for the Y-catenoid.
    pub alpha: f64,
    /// Junction circle radius.
    pub c: f64,
    pub faces: [FaceSpec; 3],
    pub tag: SurfaceTag,
}

impl YNoidGeometry {
    pub fn count(&self, class: Classification) -> usize {
        self.faces
            .iter()
            .filter(|f| f.classification == class)
            .count()
    }
}

/// Offset of the catenoid carrying a face with contact angle `a_i`, or the
/// planar limit it degenerates to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FaceOffset {
    Finite(f64),
    /// `cos a_i -> 1`, `T -> -inf`.
    Disk,
    /// `cos a_i -> -1`, `T -> +inf`.
    PlaneComplement,
}

pub fn face_offset(contact_angle: f64) -> FaceOffset {
    let cos = contact_angle.cos();
    if cos >= 1.0 - PLANAR_EPS {
        FaceOffset::Disk
    } else if cos <= -1.0 + PLANAR_EPS {
        FaceOffset::PlaneComplement
    } else {
        FaceOffset::Finite((-cos).atanh())
    }
}

fn check_alpha(alpha: f64) -> Result<(), GeometryError> {
    if alpha.is_finite() && alpha > 0.0 && alpha <= FRAC_PI_3 + ANGLE_EPS {
        Ok(())
    } else {
        Err(GeometryError::AlphaOutOfRange { alpha })
    }
}

fn check_scale(c: f64) -> Result<(), GeometryError> {
    if c.is_finite() && c > 0.0 {
        Ok(())
    } else {
        Err(GeometryError::InvalidScale { c })
    }
}

/// The three contact angles `(alpha, alpha + 2pi/3, alpha - 2pi/3)`.
pub fn contact_angles(alpha: f64) -> Result<[f64; 3], GeometryError> {
    check_alpha(alpha)?;
    Ok(angles_unchecked(alpha))
}

fn angles_unchecked(alpha: f64) -> [f64; 3] {
    [alpha, alpha + TWO_PI_3, alpha - TWO_PI_3]
}

fn axial_for(contact_angle: f64) -> AxialSign {
    if contact_angle.sin() >= 0.0 {
        AxialSign::Up
    } else {
        AxialSign::Down
    }
}

fn catenoidal_face(contact_angle: f64, offset: f64, c: f64) -> FaceSpec {
    let classification = if offset < -OFFSET_EPS {
        Classification::NonGraphical
    } else {
        Classification::Graphical
    };
    FaceSpec {
        kind: FaceKind::Catenoidal {
            offset,
            scale: c / offset.cosh(),
            axial: axial_for(contact_angle),
        },
        contact_angle,
        beta: -contact_angle.cos() / c,
        classification,
    }
}

fn planar_face(kind: FaceKind, contact_angle: f64, c: f64) -> FaceSpec {
    FaceSpec {
        kind,
        contact_angle,
        beta: -contact_angle.cos() / c,
        classification: Classification::Planar,
    }
}

/// Member `Y_alpha` of the family, `alpha` in `(0, pi/3]`.
///
/// Other parameters are related to this range by reflection through the
/// horizontal plane and are rejected rather than reduced.
pub fn build_ynoid(alpha: f64, c: f64) -> Result<YNoidGeometry, GeometryError> {
    check_alpha(alpha)?;
    check_scale(c)?;

    let angles = angles_unchecked(alpha);
    let mut faces = Vec::with_capacity(3);
    for &angle in &angles {
        let face = match face_offset(angle) {
            FaceOffset::Finite(offset) => catenoidal_face(angle, offset, c),
            FaceOffset::PlaneComplement => {
                planar_face(FaceKind::PlaneComplement { radius: c }, angle, c)
            }
            FaceOffset::Disk => return Err(GeometryError::DegenerateFace { alpha }),
        };
        faces.push(face);
    }
    let faces: [FaceSpec; 3] = [faces[0], faces[1], faces[2]];

    let tag = if faces.iter().any(|f| f.kind.is_planar()) {
        SurfaceTag::PseudoYCatenoid
    } else if (alpha - FRAC_PI_6).abs() <= ANGLE_EPS {
        SurfaceTag::PiOverSix
    } else {
        SurfaceTag::Generic
    };

    Ok(YNoidGeometry {
        alpha,
        c,
        faces,
        tag,
    })
}

/// The `alpha -> 0` limit with the horizontal plane removed: a flat disk and
/// two symmetric catenoidal ends meeting the plane at 120 degrees.
pub fn build_y_catenoid(c: f64) -> Result<YNoidGeometry, GeometryError> {
    check_scale(c)?;
    let angles = angles_unchecked(0.0);
    let disk = planar_face(FaceKind::Disk { radius: c }, angles[0], c);
    let upper = catenoidal_face(angles[1], 3f64.sqrt().ln(), c);
    let lower = catenoidal_face(angles[2], 3f64.sqrt().ln(), c);
    Ok(YNoidGeometry {
        alpha: 0.0,
        c,
        faces: [disk, upper, lower],
        tag: SurfaceTag::YCatenoid,
    })
}

/// A surface selected by name or by contact angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SurfaceChoice {
    YCatenoid,
    PseudoYCatenoid,
    PiOverSix,
    Alpha(f64),
}

impl SurfaceChoice {
    pub fn build(self, c: f64) -> Result<YNoidGeometry, GeometryError> {
        match self {
            SurfaceChoice::YCatenoid => build_y_catenoid(c),
            SurfaceChoice::PseudoYCatenoid => build_ynoid(FRAC_PI_3, c),
            SurfaceChoice::PiOverSix => build_ynoid(FRAC_PI_6, c),
            SurfaceChoice::Alpha(alpha) => build_ynoid(alpha, c),
        }
    }
}

impl FromStr for SurfaceChoice {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ycatenoid" | "y-catenoid" => Ok(SurfaceChoice::YCatenoid),
            "pseudo" => Ok(SurfaceChoice::PseudoYCatenoid),
            "pi6" => Ok(SurfaceChoice::PiOverSix),
            other => other
                .parse::<f64>()
                .map(SurfaceChoice::Alpha)
                .map_err(|_| GeometryError::UnknownSurface(s.to_string())),
        }
    }
}
