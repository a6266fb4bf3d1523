use std::process::{Command, Output};

use serde_json::Value;

fn ynoid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ynoid"))
        .args(args)
        .env_remove("YNOID_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn y_catenoid_json() {
    let out = ynoid(&["index", "--surface", "ycatenoid", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["total_index"], 1);
    assert_eq!(v["total_nullity"], 3);
}

#[test]
fn pseudo_and_pi6_reports() {
    for name in ["pseudo", "pi6"] {
        let out = ynoid(&["index", "--surface", name, "--format", "json"]);
        let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(
            (v["total_index"].as_u64(), v["total_nullity"].as_u64()),
            (Some(2), Some(5))
        );
    }
    let out = ynoid(&["index", "--surface", "pi6", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["z_contribution"]["index"], 1);
    assert_eq!(v["z_contribution"]["nullity"], 1);
}

#[test]
fn sweep_csv_rows() {
    let out = ynoid(&[
        "sweep",
        "--alpha-min",
        "0.05",
        "--alpha-max",
        "1.0471",
        "--steps",
        "50",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        [
            "alpha_rad",
            "total_index",
            "total_nullity",
            "ind0_f1",
            "ind0_f2",
            "ind0_f3",
            "steklov_index",
            "z_index",
            "z_nullity",
            "n_cutoff"
        ]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 50);
    for row in &rows {
        assert_eq!((&row[1], &row[2]), ("2", "5"));
    }
}

#[test]
fn verify_pseudo_passes() {
    let out = ynoid(&[
        "verify",
        "--surface",
        "pseudo",
        "--n-max",
        "8",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["worst_rel_error"].as_f64().unwrap() < 1e-6);
    let fixed: Vec<u64> = v["report"]["fixed_rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["count_numeric"].as_u64().unwrap())
        .collect();
    assert_eq!(fixed, [1, 0, 1]);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "sweep",
        "--alpha-min",
        "0.1",
        "--alpha-max",
        "1.0",
        "--steps",
        "7",
        "--format",
        "json",
    ];
    assert_eq!(ynoid(&args).stdout, ynoid(&args).stdout);
    let args = ["spectrum", "--alpha", "0.3", "--format", "csv"];
    assert_eq!(ynoid(&args).stdout, ynoid(&args).stdout);
}

#[test]
fn json_round_trips_byte_for_byte() {
    for args in [
        vec!["index", "--surface", "pi6", "--format", "json"],
        vec!["spectrum", "--surface", "ycatenoid", "--format", "json"],
        vec![
            "verify", "--alpha", "0.4", "--n-max", "3", "--format", "json",
        ],
    ] {
        let text = stdout(&ynoid(&args));
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&v).unwrap(), text.trim_end());
    }
}

#[test]
fn degrees_match_radians() {
    let deg = ynoid(&["index", "--alpha", "45", "--degrees", "--format", "csv"]);
    let rad = ynoid(&[
        "index",
        "--alpha",
        &std::f64::consts::FRAC_PI_4.to_string(),
        "--format",
        "csv",
    ]);
    assert!(deg.status.success());
    assert_eq!(deg.stdout, rad.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = ynoid(&[
        "index",
        "--surface",
        "pseudo",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["total_nullity"], 5);
}

#[test]
fn exit_codes() {
    let out = ynoid(&["index", "--alpha", "2.0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--alpha"));
    assert_eq!(
        ynoid(&[
            "sweep",
            "--alpha-min",
            "0.5",
            "--alpha-max",
            "0.1",
            "--steps",
            "4"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        ynoid(&[
            "sweep",
            "--alpha-min",
            "0.1",
            "--alpha-max",
            "0.5",
            "--steps",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        ynoid(&["verify", "--surface", "pseudo", "--ode-h", "1.0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ynoid(&["index", "--surface", "pseudo", "--c", "-1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ynoid(&["index", "--surface", "pseudo", "--n-max", "2"])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn tolerance_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_ynoid"))
        .args(["index", "--surface", "pseudo"])
        .env("YNOID_TOL", "-1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--tol"));
}
