use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn hek<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_hek")).args(args).env_remove("HEK_PRIME").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const HEISENBERG: &str = r#"{"dim": 3, "names": ["x", "y", "z"], "brackets": [{"i": 1, "j": 2, "coeffs": {"3": 1}}]}"#;
const NOT_JACOBI: &str = r#"{"dim": 3, "brackets": [
    {"i": 1, "j": 2, "coeffs": {"1": 1}},
    {"i": 2, "j": 3, "coeffs": {"2": 1}}]}"#;

#[test]
fn lie_validate_exit_codes() {
    let dir = TempDir::new().unwrap();
    let ok = hek(["lie", "validate", &write(&dir, "heisenberg.json", HEISENBERG)]);
    assert_eq!((code(&ok), stdout(&ok).trim()), (0, "ok"));

    let bad = hek(["lie", "validate", &write(&dir, "bad.json", NOT_JACOBI)]);
    assert_eq!(code(&bad), 1);
    assert!(stdout(&bad).contains("Jacobi identity violated at (1,2,3)"));

    let half = hek([
        "lie",
        "validate",
        &write(&dir, "half.json", r#"{"dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": {"2": "1/2"}}]}"#),
    ]);
    assert_eq!(code(&half), 1);

    assert_eq!(code(&hek(["lie", "validate", &write(&dir, "broken.json", "{\"dim\": ")])), 2);
    assert_eq!(code(&hek(["lie", "validate", "/nonexistent/spec.json"])), 2);

    let json = hek(["--format", "json", "lie", "validate", &write(&dir, "h2.json", HEISENBERG)]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["valid"], true);
}

#[test]
fn u_mul_and_norm() {
    let mul = hek(["u", "mul", "heisenberg", "x2", "x1"]);
    assert_eq!((code(&mul), stdout(&mul).trim()), (0, "x1*x2 - x3"));
    let sl2 = hek(["u", "mul", "sl2", "x2", "x1"]);
    assert_eq!(stdout(&sl2).trim(), "x1*x2 + 2*x1");

    let norm = hek(["u", "norm", "heisenberg", "x1*x2 - x3", "--s", "1"]);
    assert_eq!((code(&norm), stdout(&norm).trim()), (0, "p^2"));
    let zero = hek(["u", "norm", "sl2", "0"]);
    assert_eq!(stdout(&zero).trim(), "0 (p^-inf)");
    let several = hek(["--prime", "3", "u", "norm", "heisenberg", "1/3*x1", "--s", "1/2", "--s", "2"]);
    assert_eq!(stdout(&several), "s = 1/2: p^3/2\ns = 2: p^3\n");
    let csv = hek(["--format", "csv", "u", "norm", "heisenberg", "-x3", "--s", "1/2"]);
    assert_eq!(stdout(&csv), "s,exponent\n1/2,1/2\n");

    assert_eq!(code(&hek(["u", "mul", "heisenberg", "x2*x1", "x1"])), 2);
    assert_eq!(code(&hek(["u", "mul", "heisenberg", "x4", "x1"])), 2);
    assert_eq!(code(&hek(["u", "norm", "heisenberg", "x1", "--s", "0"])), 2);
    assert_eq!(code(&hek(["u", "mul", "nosuch", "x1", "x1"])), 2);
    assert_eq!(code(&hek(["--prime", "4", "u", "mul", "sl2", "x1", "x1"])), 2);
}

#[test]
fn prime_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_hek"))
        .args(["u", "norm", "abelian(1)", "5*x1", "--s", "1"])
        .env("HEK_PRIME", "5")
        .output()
        .unwrap();
    assert_eq!(stdout(&out).trim(), "p^0");
}

#[test]
fn verify_reports() {
    let out = hek(["--format", "json", "verify", "norms", "--preset", "sl2", "--samples", "50", "--seed", "7"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["suite"], "norms");
    assert_eq!(v["config"]["seed"], 7);
    assert!(v["elapsed_ms"].is_u64());
    for p in v["properties"].as_array().unwrap() {
        assert_eq!(p["failures"], 0);
        assert!(p["first_counterexample"].is_null());
    }

    let homotopy = hek(["verify", "homotopy", "--preset", "heisenberg", "--samples", "30"]);
    assert_eq!(code(&homotopy), 0);
    assert!(stdout(&homotopy).contains("max iterations"));

    let dir = TempDir::new().unwrap();
    let half = write(&dir, "half.json", r#"{"dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": {"2": "1/2"}}]}"#);
    assert_eq!(code(&hek(["verify", "norms", "--lie", &half])), 1);
    let forced = hek(["verify", "norms", "--lie", &half, "--allow-invalid", "--samples", "50"]);
    assert_eq!(code(&forced), 1);
    assert!(stdout(&forced).contains("first counterexample"));

    assert_eq!(code(&hek(["verify", "norms"])), 2);
    assert_eq!(code(&hek(["verify", "everything", "--preset", "sl2"])), 2);
}

#[test]
fn out_writes_a_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("table.csv");
    let out = hek(["--format", "csv", "--out", path.to_str().unwrap(), "cohomology", "heisenberg", "trivial"]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(Path::new(&path)).unwrap(), "degree,betti\n0,1\n1,2\n2,2\n3,1\n");
}

#[test]
fn cohomology_tables() {
    for (lie, expected) in [("sl2", "1,0,0,1"), ("heisenberg", "1,2,2,1"), ("abelian(3)", "1,3,3,1")] {
        let out = hek(["cohomology", lie, "trivial"]);
        assert_eq!((code(&out), stdout(&out).trim()), (0, expected));
    }
    let hom = hek(["cohomology", "sl2", "adjoint", "--kind", "homology"]);
    assert_eq!(stdout(&hom).trim(), "0,0,0,0");
    let ext = hek(["cohomology", "sl2", "adjoint", "adjoint", "--kind", "ext"]);
    assert_eq!(stdout(&ext).trim(), "1,0,0,1");
    let tor = hek(["--format", "json", "cohomology", "heisenberg", "trivial", "trivial", "--kind", "tor"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&tor)).unwrap();
    assert_eq!(v["betti"], serde_json::json!([1, 2, 2, 1]));
    assert_eq!(v["euler_characteristic"], 0);

    let dir = TempDir::new().unwrap();
    let module = write(&dir, "triv.json", r#"{"dim": 1, "action": [[[0]], [[0]], [[0]]]}"#);
    assert_eq!(stdout(&hek(["cohomology", "heisenberg", &module])).trim(), "1,2,2,1");
    let spec = write(&dir, "h.json", HEISENBERG);
    assert_eq!(stdout(&hek(["cohomology", &spec, "trivial"])).trim(), "1,2,2,1");

    // identity action is not an sl2 module
    let fake = write(&dir, "fake.json", r#"{"dim": 1, "action": [[[1]], [[1]], [[1]]]}"#);
    assert_eq!(code(&hek(["cohomology", "sl2", &fake])), 1);
    assert_eq!(code(&hek(["cohomology", "sl2", "trivial", "--kind", "ext"])), 2);
    assert_eq!(code(&hek(["cohomology", "sl2", &write(&dir, "short.json", r#"{"dim": 1, "action": [[[0]]]}"#)])), 2);
}

#[test]
fn converge_verdicts_and_profiles() {
    for (abc, expected) in
        [(["1", "0", "0"], "AllRadii"), (["0", "2", "0"], "RadiiBelow(2)"), (["0", "0", "0"], "Divergent")]
    {
        let out = hek(["converge", abc[0], abc[1], abc[2], "2"]);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out).lines().next().unwrap(), expected);
    }
    let negative = hek(["converge", "-1/2", "3", "-2", "1"]);
    assert_eq!(stdout(&negative).lines().next().unwrap(), "Divergent");

    let csv = hek(["--format", "csv", "converge", "0", "2", "0", "2", "--profile", "--s", "3", "--max-degree", "3"]);
    assert_eq!(stdout(&csv), "N,exponent\n0,0\n1,1\n2,2\n3,3\n");
    let json = hek(["--format", "json", "converge", "1", "0", "0", "1", "--profile", "--max-degree", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["verdict"], "AllRadii");
    assert_eq!(v["profile"][2]["exponent"], "-2");

    assert_eq!(code(&hek(["converge", "x", "0", "0", "1"])), 2);
    assert_eq!(code(&hek(["converge", "1", "0", "0", "1", "--profile", "--s", "-1"])), 2);
}
