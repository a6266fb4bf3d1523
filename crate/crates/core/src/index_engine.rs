//! Assembly of the Morse index and nullity.
//!
//! The index splits into three parts: variations fixing the junction (one
//! Dirichlet index per face), extensions of Steklov eigenfunctions (one
//! constrained quadratic form per Fourier mode), and the correction space
//! spanned by Dirichlet kernel elements. In mode `n` an extension with
//! junction values `C_i g` and `C_1 + C_2 + C_3 = 0` has second variation
//! `sum_i (delta_i - beta_i) C_i^2`, so only the signs of a symmetric 2x2
//! form are needed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closed_spectrum::{steklov_mode, SteklovMode};
use crate::geometry::{Classification, FaceSpec, YNoidGeometry};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_N_MAX: u32 = 64;
/// Consecutive positive-definite modes after which the Steklov sum is closed.
pub const POSITIVE_RUN: usize = 3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IndexError {
    #[error("inconsistent inertia: det = {det:e} > tol but trace = {trace:e} is zero within tol")]
    InconsistentInertia { det: f64, trace: f64 },
    #[error(
        "mode {n} has a Dirichlet kernel element on face {face}; \
         route it through z_space_contribution"
    )]
    KernelMode { n: u32, face: usize },
    #[error("more than one face carries a Dirichlet kernel element; unsupported configuration")]
    MultipleKernelFaces,
    #[error("Steklov contributions did not become positive definite by n_max = {n_max}")]
    NonConvergence {
        n_max: u32,
        modes: Vec<ModeContribution>,
    },
}

/// Signs of the constrained quadratic form on the plane `C_1 + C_2 + C_3 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub negative: u32,
    pub zero: u32,
    pub positive: u32,
}

impl Inertia {
    pub const fn new(negative: u32, zero: u32, positive: u32) -> Self {
        Self {
            negative,
            zero,
            positive,
        }
    }

    pub fn is_positive_definite(&self) -> bool {
        self.positive == 2
    }
}

/// Inertia of `P(C) = sum a_i C_i^2` restricted to `C_1 + C_2 + C_3 = 0`.
///
/// Eliminating `C_3` gives the matrix `[[a1 + a3, a3], [a3, a2 + a3]]` with
/// determinant `a1 a2 + a1 a3 + a2 a3` and trace `a1 + a2 + 2 a3`.
pub fn classify_quadratic(a: [f64; 3], tol: f64) -> Result<Inertia, IndexError> {
    let [a1, a2, a3] = a;
    let det = a1 * a2 + a1 * a3 + a2 * a3;
    let trace = a1 + a2 + 2.0 * a3;

    let inertia = if det < -tol {
        Inertia::new(1, 0, 1)
    } else if det <= tol {
        if trace < -tol {
            Inertia::new(1, 1, 0)
        } else if trace > tol {
            Inertia::new(0, 1, 1)
        } else {
            Inertia::new(0, 2, 0)
        }
    } else if trace < -tol {
        Inertia::new(2, 0, 0)
    } else if trace > tol {
        Inertia::new(0, 0, 2)
    } else {
        return Err(IndexError::InconsistentInertia { det, trace });
    };
    Ok(inertia)
}

/// Inertia is invariant under positive rescaling; tolerances apply to the
/// form normalised so its largest coefficient has magnitude at most one.
fn classify_normalized(a: [f64; 3], tol: f64) -> Result<Inertia, IndexError> {
    let scale = a.iter().fold(1.0_f64, |m, x| m.max(x.abs()));
    classify_quadratic(a.map(|x| x / scale), tol)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeContribution {
    pub n: u32,
    pub multiplicity: u32,
    /// `c (delta_i - beta_i)`, dimensionless.
    pub coefficients: [f64; 3],
    pub inertia: Inertia,
    pub index: u32,
    pub nullity: u32,
}

pub fn mode_contribution(
    geometry: &YNoidGeometry,
    mode: &SteklovMode,
    tol: f64,
) -> Result<ModeContribution, IndexError> {
    if let Some(face) = mode.kernel_faces().next() {
        return Err(IndexError::KernelMode { n: mode.n, face });
    }
    let mut coefficients = [0.0; 3];
    for (i, (face, fd)) in geometry.faces.iter().zip(&mode.faces).enumerate() {
        let delta = fd.delta.value().expect("kernel members rejected above");
        coefficients[i] = geometry.c * (delta - face.beta);
    }
    let inertia = classify_normalized(coefficients, tol)?;
    Ok(ModeContribution {
        n: mode.n,
        multiplicity: mode.multiplicity,
        coefficients,
        inertia,
        index: inertia.negative * mode.multiplicity,
        nullity: inertia.zero * mode.multiplicity,
    })
}

/// Index of the Jacobi operator on one face with Dirichlet data on the junction.
pub fn fixed_boundary_index(face: &FaceSpec) -> u32 {
    match face.classification {
        Classification::NonGraphical => 1,
        Classification::Graphical | Classification::Planar => 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZContribution {
    pub index: u32,
    pub nullity: u32,
    /// Face (0-based) carrying the kernel element, if any.
    pub kernel_face: Option<usize>,
    /// `c ((delta_i - beta_i) + (delta_j - beta_j))` over the other two faces.
    pub residual: Option<f64>,
    /// The residual form was negative, which adds a second index direction.
    pub residual_negative: bool,
}

impl ZContribution {
    const TRIVIAL: ZContribution = ZContribution {
        index: 0,
        nullity: 0,
        kernel_face: None,
        residual: None,
        residual_negative: false,
    };
}

/// Contribution of the space built from Dirichlet kernel elements.
///
/// With a kernel element on face `k`, directions with `C_k != 0` can always be
/// made negative by adding a multiple of the kernel element. With `C_k = 0`
/// the constraint forces `C_i = -C_j` and the form reduces to the residual
/// `(delta_i - beta_i) + (delta_j - beta_j)`.
pub fn z_space_contribution(
    geometry: &YNoidGeometry,
    spectrum: &[SteklovMode],
    tol: f64,
) -> Result<ZContribution, IndexError> {
    let mut kernel = None;
    for mode in spectrum {
        for face in mode.kernel_faces() {
            if kernel.is_some() {
                return Err(IndexError::MultipleKernelFaces);
            }
            kernel = Some((mode, face));
        }
    }
    let Some((mode, k)) = kernel else {
        return Ok(ZContribution::TRIVIAL);
    };

    let others: Vec<f64> = (0..3)
        .filter(|&i| i != k)
        .map(|i| {
            let delta = mode.faces[i]
                .delta
                .value()
                .ok_or(IndexError::MultipleKernelFaces)?;
            Ok(geometry.c * (delta - geometry.faces[i].beta))
        })
        .collect::<Result<_, IndexError>>()?;
    let residual = others[0] + others[1];
    let scale = others.iter().fold(1.0_f64, |m, x| m.max(x.abs()));
    let normalized = residual / scale;

    let (index, nullity, residual_negative) = if normalized < -tol {
        (2, 0, true)
    } else if normalized <= tol {
        (1, 1, false)
    } else {
        (1, 0, false)
    };
    Ok(ZContribution {
        index: index * mode.multiplicity,
        nullity: nullity * mode.multiplicity,
        kernel_face: Some(k),
        residual: Some(residual),
        residual_negative,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexReport {
    pub fixed_boundary: [u32; 3],
    pub steklov_total: u32,
    pub z_contrib: ZContribution,
    pub mode_table: Vec<ModeContribution>,
    pub total_index: u32,
    pub total_nullity: u32,
    /// Last mode evaluated; every later mode is positive definite.
    pub n_cutoff: u32,
}

/// Morse index and nullity of a Y-noid.
///
/// Modes are evaluated in increasing `n` until [`POSITIVE_RUN`] consecutive
/// modes are positive definite. Steklov eigenvalues grow linearly in `n` on
/// every face kind, so positivity is then permanent.
pub fn total_index(
    geometry: &YNoidGeometry,
    n_max: u32,
    tol: f64,
) -> Result<IndexReport, IndexError> {
    let fixed_boundary = geometry.faces.map(|f| fixed_boundary_index(&f));

    let mut mode_table = Vec::new();
    let mut kernel_modes = Vec::new();
    let mut run = 0;
    let mut n_cutoff = None;
    for n in 0..=n_max {
        let mode = steklov_mode(geometry, n);
        if mode.has_kernel_member() {
            kernel_modes.push(mode);
            run = 0;
            continue;
        }
        let contribution = mode_contribution(geometry, &mode, tol)?;
        if contribution.inertia.is_positive_definite() {
            run += 1;
        } else {
            run = 0;
        }
        mode_table.push(contribution);
        if run == POSITIVE_RUN {
            n_cutoff = Some(n);
            break;
        }
    }
    let Some(n_cutoff) = n_cutoff else {
        return Err(IndexError::NonConvergence {
            n_max,
            modes: mode_table,
        });
    };

    let z_contrib = z_space_contribution(geometry, &kernel_modes, tol)?;
    let steklov_total: u32 = mode_table.iter().map(|m| m.index).sum();
    let steklov_nullity: u32 = mode_table.iter().map(|m| m.nullity).sum();

    Ok(IndexReport {
        fixed_boundary,
        steklov_total,
        z_contrib,
        total_index: fixed_boundary.iter().sum::<u32>() + steklov_total + z_contrib.index,
        total_nullity: steklov_nullity + z_contrib.nullity,
        mode_table,
        n_cutoff,
    })
}
