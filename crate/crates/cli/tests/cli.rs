use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_borelq"))
        .args(args)
        .env("BORELQ_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

fn validate(schema: &str, out: &Output) -> Value {
    let text = std::fs::read_to_string(schema_dir().join(format!("{schema}.schema.json"))).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let value: Value = serde_json::from_slice(&out.stdout).unwrap();
    let errors: Vec<String> = validator
        .iter_errors(&value)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{errors:?}");
    value
}

const CASES: &[(&str, &[&str])] = &[
    ("cartan", &["cartan", "--type", "G2"]),
    ("roots", &["roots", "--type", "A2"]),
    ("dim", &["dim", "--type", "A2", "--eta", "1,1"]),
    ("pbw", &["pbw", "--type", "A2", "--height", "3"]),
    ("nf", &["nf", "K1^-1 E1 K1", "--type", "A1"]),
    ("nf", &["nf", "E1 F1", "--type", "A1"]),
    ("nf", &["nf", "E1 K1 E1", "--r", "5"]),
    ("delta", &["delta", "E1 E2", "--type", "A2"]),
    (
        "antipode",
        &["antipode", "E1 E2", "--type", "A2", "--inverse"],
    ),
    ("serre-check", &["serre-check", "--type", "B2"]),
    (
        "hopf-check",
        &["hopf-check", "--type", "A1", "--height", "3"],
    ),
    (
        "smash-check",
        &["smash-check", "--type", "A1", "--height", "3"],
    ),
    (
        "rmatrix-solve",
        &["rmatrix", "solve", "--type", "A1", "--r", "4"],
    ),
    (
        "rmatrix-solve",
        &["rmatrix", "solve", "--type", "G2", "--r", "6"],
    ),
    ("rmatrix-classify", &["rmatrix", "classify"]),
    (
        "rmatrix-generic",
        &["rmatrix", "generic", "--type", "A1", "--box", "2"],
    ),
    (
        "verma-weights",
        &["verma", "weights", "--type", "A2", "--height", "3"],
    ),
    (
        "verma-tensor-decompose",
        &["verma", "tensor-decompose", "--type", "A1", "--height", "3"],
    ),
    (
        "yd-build",
        &[
            "yd", "build", "--type", "A1", "--r", "5", "--beta", "2", "--g", "1",
        ],
    ),
    (
        "yd-check",
        &[
            "yd", "check", "--type", "A1", "--r", "4", "--beta", "1", "--g", "1",
        ],
    ),
    ("yd-scan", &["yd", "scan", "--type", "A1", "--r", "4"]),
];

#[test]
fn json_outputs_match_schemas_and_repeat() {
    let dir = tempfile::tempdir().unwrap();
    for (schema, args) in CASES {
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        let first = run(&full, dir.path());
        assert!(
            first.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        validate(schema, &first);
        let second = run(&full, dir.path());
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn warm_and_cold_cache_agree() {
    let cold = tempfile::tempdir().unwrap();
    let args = ["--json", "pbw", "--type", "B2", "--height", "4"];
    let a = run(&args, cold.path());
    let b = run(&args, cold.path());
    let other = tempfile::tempdir().unwrap();
    let c = run(
        &[
            "--cache-dir",
            other.path().to_str().unwrap(),
            "--json",
            "pbw",
            "--type",
            "B2",
            "--height",
            "4",
        ],
        cold.path(),
    );
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert!(std::fs::read_dir(cold.path()).unwrap().count() > 0);
    assert!(std::fs::read_dir(other.path()).unwrap().count() > 0);
}

#[test]
fn examples() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["dim", "--type", "A2", "--eta", "1,1"], dir.path());
    assert_eq!(out.stdout, b"2\n");
    let out = run(&["hopf-check", "--type", "A1", "--height", "3"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let out = run(
        &["--json", "rmatrix", "classify", "--grid", "default"],
        dir.path(),
    );
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["positive"], serde_json::json!([{"type": "A1", "r": 4}]));
    let out = run(
        &[
            "nf",
            "E1*E1*E2 - (q+q^-1)*E1*E2*E1 + E2*E1*E1",
            "--type",
            "A2",
        ],
        dir.path(),
    );
    assert_eq!(out.stdout, b"0\n");
    let out = run(&["nf", "K1*K1^-1"], dir.path());
    assert_eq!(out.stdout, b"1\n");
    let out = run(&["delta", "E1^2"], dir.path());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "K1^2 (x) E1^2 + (1 + q^2)*E1*K1 (x) E1 + E1^2 (x) 1\n"
    );
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["frobnicate"], dir.path()).status.code(), Some(2));
    assert_eq!(run(&[], dir.path()).status.code(), Some(2));
    let out = run(&["nf", "E3", "--type", "A2"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("generator index out of range"));
    assert_eq!(run(&["nf", "E1 +"], dir.path()).status.code(), Some(2));
    assert_eq!(run(&["delta", "F1"], dir.path()).status.code(), Some(2));
    assert_eq!(
        run(&["dim", "--type", "A2", "--eta", "x"], dir.path())
            .status
            .code(),
        Some(2)
    );
    let fault = [
        "yd",
        "check",
        "--type",
        "A1",
        "--r",
        "5",
        "--beta",
        "1",
        "--g",
        "0",
        "--fault-antipode",
    ];
    assert_eq!(run(&fault, dir.path()).status.code(), Some(1));
    assert_eq!(run(&["--help"], dir.path()).status.code(), Some(0));
}

#[test]
fn grid_file() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid.json");
    std::fs::write(
        &grid,
        r#"[{"type": "A1", "rank": 1, "r": 4}, {"type": "G2", "r": 6}]"#,
    )
    .unwrap();
    let out = run(
        &[
            "--json",
            "rmatrix",
            "classify",
            "--grid",
            grid.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let v = validate("rmatrix-classify", &out);
    assert_eq!(v["rows"][0]["invertible_exists"], true);
    assert_eq!(v["rows"][1]["valid"], false);
    let text = std::fs::read_to_string(schema_dir().join("grid.schema.json")).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    let g: Value = serde_json::from_str(&std::fs::read_to_string(&grid).unwrap()).unwrap();
    assert!(jsonschema::validator_for(&schema).unwrap().is_valid(&g));
}
