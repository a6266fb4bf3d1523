//! Closed-form Steklov eigenvalues of the Jacobi operator on each face.
//!
//! Separation of variables reduces the Jacobi equation on a catenoidal end to
//! `f'' + (2 sech^2(t + T) - n^2) f = 0`. In each Fourier mode exactly one
//! solution is admissible in the weighted space:
//!
//! | mode    | admissible branch            | excluded branch                   |
//! |---------|------------------------------|-----------------------------------|
//! | `n = 0` | `tanh(t+T)`                  | `1 - (t+T) tanh(t+T)`             |
//! | `n = 1` | `sech(t+T)`                  | `sinh(t+T) + (t+T) sech(t+T)`     |
//! | `n > 1` | `(n + tanh(t+T)) e^{-n(t+T)}`| `(n - tanh(t+T)) e^{n(t+T)}`      |
//!
//! On flat faces the Jacobi operator is the Laplacian and the admissible
//! radial factors are `r^n` on the disk and `1`, `r^{-n}` on the plane
//! complement. The Steklov eigenvalue is the ratio of the outward conormal
//! derivative to the trace on the junction circle.

use serde::{Deserialize, Serialize};

use crate::geometry::{FaceKind, FaceSpec, YNoidGeometry, OFFSET_EPS};

/// Steklov eigenvalue of one face in one mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Delta {
    Value(f64),
    /// The admissible solution vanishes on the junction: it lies in the
    /// Dirichlet kernel and defines no Steklov eigenvalue.
    KernelMember,
}

impl Delta {
    pub fn value(self) -> Option<f64> {
        match self {
            Delta::Value(v) => Some(v),
            Delta::KernelMember => None,
        }
    }

    pub fn is_kernel_member(self) -> bool {
        matches!(self, Delta::KernelMember)
    }
}

/// Which of the two radial solutions of a mode is meant.
///
/// On the disk `Decaying` names the regular polynomial branch `r^n` and
/// `Growing` the singular one (`log r`, `r^{-n}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Decaying,
    Growing,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FaceDelta {
    pub delta: Delta,
    pub admissible: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SteklovMode {
    pub n: u32,
    pub faces: [FaceDelta; 3],
    pub multiplicity: u32,
}

impl SteklovMode {
    pub fn kernel_faces(&self) -> impl Iterator<Item = usize> + '_ {
        self.faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.delta.is_kernel_member())
            .map(|(i, _)| i)
    }

    pub fn has_kernel_member(&self) -> bool {
        self.kernel_faces().next().is_some()
    }
}

/// Number of independent boundary traces in mode `n` (`cos n theta`, `sin n theta`).
pub fn multiplicity(n: u32) -> u32 {
    if n == 0 {
        1
    } else {
        2
    }
}

/// Steklov eigenvalue of the catenoidal end with offset `offset` and scale `scale`.
pub fn catenoid_delta(offset: f64, scale: f64, n: u32) -> Delta {
    debug_assert!(scale > 0.0 && offset.is_finite());
    let cosh = offset.cosh();
    let tanh = offset.tanh();
    match n {
        0 if offset.abs() < OFFSET_EPS => Delta::KernelMember,
        0 => Delta::Value(-1.0 / (scale * cosh * cosh * offset.sinh())),
        1 => Delta::Value(offset.sinh() / (scale * cosh * cosh)),
        _ => {
            let n = f64::from(n);
            let shifted = n + tanh;
            Delta::Value(
                -(1.0 - n * cosh * cosh * shifted) / (scale * shifted * cosh * cosh * cosh),
            )
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlatKind {
    Disk,
    PlaneComplement,
}

/// Steklov eigenvalue `n / R0` of a flat face. Both flat kinds share it.
pub fn flat_delta(radius: f64, n: u32, _kind: FlatKind) -> f64 {
    debug_assert!(radius > 0.0);
    f64::from(n) / radius
}

/// Whether a radial solution branch lies in the weighted space.
///
/// On the non-compact faces the growing branch fails the weighted `L^2` bound
/// at infinity in every mode. On the disk the regular branch is smooth on the
/// closed face and the other one is singular at the centre.
pub fn weighted_admissible(_kind: &FaceKind, _n: u32, branch: Branch) -> bool {
    branch == Branch::Decaying
}

pub fn face_delta(face: &FaceSpec, n: u32) -> FaceDelta {
    let delta = match face.kind {
        FaceKind::Catenoidal { offset, scale, .. } => catenoid_delta(offset, scale, n),
        FaceKind::Disk { radius } => Delta::Value(flat_delta(radius, n, FlatKind::Disk)),
        FaceKind::PlaneComplement { radius } => {
            Delta::Value(flat_delta(radius, n, FlatKind::PlaneComplement))
        }
    };
    FaceDelta {
        delta,
        admissible: weighted_admissible(&face.kind, n, Branch::Decaying),
    }
}

pub fn steklov_mode(geometry: &YNoidGeometry, n: u32) -> SteklovMode {
    SteklovMode {
        n,
        faces: geometry.faces.map(|f| face_delta(&f, n)),
        multiplicity: multiplicity(n),
    }
}

/// Modes `0..=n_max` of every face.
pub fn spectrum_table(geometry: &YNoidGeometry, n_max: u32) -> Vec<SteklovMode> {
    (0..=n_max).map(|n| steklov_mode(geometry, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_y_catenoid, build_ynoid, DEFAULT_SCALE};
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_6};

    const SQRT3: f64 = 1.732_050_807_568_877_2;

    fn ln_sqrt3() -> f64 {
        SQRT3.ln()
    }

    #[test]
    fn catenoid_spot_values() {
        let d0 = catenoid_delta(ln_sqrt3(), 1.0, 0).value().unwrap();
        assert_relative_eq!(d0, -3.0 * SQRT3 / 4.0, epsilon = 1e-12);
        let d1 = catenoid_delta(ln_sqrt3(), 1.0, 1).value().unwrap();
        assert_relative_eq!(d1, SQRT3 / 4.0, epsilon = 1e-12);
        let d0 = catenoid_delta(-ln_sqrt3(), 1.0, 0).value().unwrap();
        assert_relative_eq!(d0, 3.0 * SQRT3 / 4.0, epsilon = 1e-12);
        let d2 = catenoid_delta(ln_sqrt3(), 1.0, 2).value().unwrap();
        assert_relative_eq!(d2, 17.0 * SQRT3 / 20.0, epsilon = 1e-12);
    }

    #[test]
    fn neck_offset_is_kernel_member_only_in_mode_zero() {
        assert_eq!(catenoid_delta(0.0, 1.0, 0), Delta::KernelMember);
        assert_eq!(catenoid_delta(5e-10, 1.0, 0), Delta::KernelMember);
        assert_eq!(catenoid_delta(0.0, 1.0, 1), Delta::Value(0.0));
        assert!(catenoid_delta(0.0, 1.0, 2).value().unwrap() > 0.0);
        assert!(!catenoid_delta(2e-9, 1.0, 0).is_kernel_member());
    }

    #[test]
    fn flat_values() {
        assert_relative_eq!(
            flat_delta(DEFAULT_SCALE, 1, FlatKind::Disk),
            SQRT3 / 2.0,
            epsilon = 1e-15
        );
        assert_eq!(flat_delta(DEFAULT_SCALE, 0, FlatKind::PlaneComplement), 0.0);
        assert_eq!(flat_delta(1.0, 5, FlatKind::Disk), 5.0);
    }

    #[test]
    fn admissibility() {
        let cat = FaceKind::Catenoidal {
            offset: 0.3,
            scale: 1.0,
            axial: crate::geometry::AxialSign::Up,
        };
        assert!(!weighted_admissible(&cat, 0, Branch::Growing));
        assert!(weighted_admissible(&cat, 0, Branch::Decaying));
        let outer = FaceKind::PlaneComplement { radius: 1.0 };
        assert!(!weighted_admissible(&outer, 0, Branch::Growing));
        assert!(weighted_admissible(&outer, 4, Branch::Decaying));
        let disk = FaceKind::Disk { radius: 1.0 };
        assert!(weighted_admissible(&disk, 3, Branch::Decaying));
    }

    #[test]
    fn y_catenoid_table() {
        let g = build_y_catenoid(DEFAULT_SCALE).unwrap();
        let table = spectrum_table(&g, 1);
        let m0: Vec<f64> = table[0]
            .faces
            .iter()
            .map(|f| f.delta.value().unwrap())
            .collect();
        assert_relative_eq!(m0[0], 0.0);
        assert_relative_eq!(m0[1], -3.0 * SQRT3 / 4.0, epsilon = 1e-12);
        assert_relative_eq!(m0[2], -3.0 * SQRT3 / 4.0, epsilon = 1e-12);
        let m1: Vec<f64> = table[1]
            .faces
            .iter()
            .map(|f| f.delta.value().unwrap())
            .collect();
        assert_relative_eq!(m1[0], SQRT3 / 2.0, epsilon = 1e-12);
        assert_relative_eq!(m1[1], SQRT3 / 4.0, epsilon = 1e-12);
        assert_relative_eq!(m1[2], SQRT3 / 4.0, epsilon = 1e-12);
        assert_eq!(table[0].multiplicity, 1);
        assert_eq!(table[1].multiplicity, 2);
        assert!(table.iter().all(|m| m.faces.iter().all(|f| f.admissible)));
    }

    #[test]
    fn pseudo_table() {
        let g = build_ynoid(FRAC_PI_3, DEFAULT_SCALE).unwrap();
        let m0 = &spectrum_table(&g, 0)[0];
        let v: Vec<f64> = m0.faces.iter().map(|f| f.delta.value().unwrap()).collect();
        assert_relative_eq!(v[0], 3.0 * SQRT3 / 4.0, epsilon = 1e-12);
        assert_eq!(v[1], 0.0);
        assert_relative_eq!(v[2], 3.0 * SQRT3 / 4.0, epsilon = 1e-12);
    }

    #[test]
    fn pi_over_six_flags_kernel() {
        let g = build_ynoid(FRAC_PI_6, 1.0).unwrap();
        let m0 = steklov_mode(&g, 0);
        assert_eq!(m0.kernel_faces().collect::<Vec<_>>(), vec![2]);
        assert!(!steklov_mode(&g, 1).has_kernel_member());
    }
}
