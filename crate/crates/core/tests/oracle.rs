use std::f64::consts::{FRAC_PI_3, FRAC_PI_6};

use ynoid_core::closed_spectrum::FlatKind;
use ynoid_core::geometry::{build_y_catenoid, build_ynoid, FaceKind, DEFAULT_SCALE};
use ynoid_core::numeric_oracle::{
    dtn_numeric, dtn_richardson, flat_dtn_numeric, verify_all, OdeConfig, OracleError,
};

#[test]
fn mode_two_spot_value() {
    let d = dtn_richardson(3f64.sqrt().ln(), 1.0, 2, &OdeConfig::default()).unwrap();
    assert!((d - 1.472243).abs() < 1e-6, "{d}");
    assert!((d - 17.0 * 3f64.sqrt() / 20.0).abs() < 1e-12);
}

#[test]
fn outer_plane_mode_zero_vanishes() {
    assert!(
        flat_dtn_numeric(1.0, 0, FlatKind::PlaneComplement)
            .unwrap()
            .abs()
            < 1e-10
    );
}

#[test]
fn pi_over_six_neck_face_has_no_steklov_value() {
    let g = build_ynoid(FRAC_PI_6, DEFAULT_SCALE).unwrap();
    let FaceKind::Catenoidal { offset, scale, .. } = g.faces[2].kind else {
        panic!("third face should be catenoidal");
    };
    let err = dtn_numeric(offset, scale, 0, &OdeConfig::default()).unwrap_err();
    assert!(matches!(err, OracleError::NearKernel { .. }));
    assert!(
        dtn_numeric(offset, scale, 1, &OdeConfig::default())
            .unwrap()
            .abs()
            < 1e-9
    );
}

#[test]
fn verification_passes_across_family() {
    let cfg = OdeConfig::default();
    let mut surfaces = vec![build_y_catenoid(DEFAULT_SCALE).unwrap()];
    for k in [1, 7, 25, 49, 50, 51, 75, 99, 100] {
        surfaces.push(build_ynoid(FRAC_PI_3 * f64::from(k) / 100.0, DEFAULT_SCALE).unwrap());
    }
    for g in &surfaces {
        let report = verify_all(g, 6, &cfg).unwrap();
        assert!(report.passed, "alpha {}: {:?}", g.alpha, report.failures);
    }
}

#[test]
fn report_is_deterministic() {
    let g = build_ynoid(0.4, 2.0).unwrap();
    let cfg = OdeConfig::default();
    assert_eq!(
        verify_all(&g, 3, &cfg).unwrap(),
        verify_all(&g, 3, &cfg).unwrap()
    );
}
