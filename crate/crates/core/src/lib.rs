//! Morse index and nullity of Y-noid minimal surfaces.
//!
//! A Y-noid is three catenoidal (or flat) ends meeting along a circle at
//! 120 degrees. The index is assembled from a fixed-boundary part on each
//! face, a three-face Steklov problem per Fourier mode, and a correction on
//! the space of Dirichlet kernel elements. [`numeric_oracle`] rechecks every
//! closed-form ingredient by direct integration of the mode ODEs.

pub mod closed_spectrum;
pub mod geometry;
pub mod index_engine;
pub mod numeric_oracle;
mod ode;

pub use closed_spectrum::{spectrum_table, Delta, SteklovMode};
pub use geometry::{
    build_y_catenoid, build_ynoid, FaceKind, FaceSpec, GeometryError, SurfaceChoice, SurfaceTag,
    YNoidGeometry, DEFAULT_SCALE,
};
pub use index_engine::{total_index, IndexError, IndexReport, Inertia, DEFAULT_N_MAX, DEFAULT_TOL};
pub use numeric_oracle::{verify_all, OdeConfig, OracleError, VerificationReport};
