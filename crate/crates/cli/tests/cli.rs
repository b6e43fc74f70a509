use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trophyp")).args(args).env_remove("TROPHYP_SEED").output().expect("binary runs")
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{e}: stdout {:?}, stderr {:?}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    });
    (out.status.code().unwrap(), v)
}

fn path(p: &std::path::Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn sign_variation_of_the_standard_vector() {
    assert_eq!(run_json(&["varbar", "--vec", "1,0,0,1,-1"]), (0, json!({ "result": 3 })));
    assert_eq!(run_json(&["var", "--vec", "1,0,0,1,-1"]), (0, json!({ "result": 1 })));
    assert_eq!(run(&["varbar", "--vec", "1,x"]).status.code(), Some(2));
}

#[test]
fn crossing_matroid_is_rejected_with_blocks() {
    let (code, v) = run_json(&["positroid", "--in", path(&fixture("crossing_matroid.json"))]);
    assert_eq!(code, 1);
    assert_eq!(v["result"], "fail");
    assert_eq!(v["check"], "positroid");
    assert_eq!(v["certificate"]["certificate"]["crossing"]["blocks"], json!([[1, 3], [2, 4]]));
}

#[test]
fn uniform_matroid_is_a_positroid() {
    let (code, v) = run_json(&["positroid", "--in", path(&fixture("u23.json"))]);
    assert_eq!((code, v["result"].clone()), (0, json!("pass")));
}

#[test]
fn initial_form_of_circuit_polynomial() {
    let (code, v) = run_json(&["poly", "tinit", "--in", path(&fixture("f123.json")), "--w", "1/2,1/2,0,-1"]);
    assert_eq!(code, 0);
    assert_eq!(v["display"], "x1*x3 + x2*x3");
    let exps: Vec<&Value> = v["result"]["terms"].as_array().unwrap().iter().map(|t| &t["exp"]).collect();
    assert_eq!(exps, [&json!([0, 1, 1, 0]), &json!([1, 0, 1, 0])]);
}

#[test]
fn malformed_json_exits_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, "{\"n\": 3,\n  \"rank\": }").unwrap();
    let out = run(&["positroid", "--in", path(&p)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn invalid_matroid_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("m.json");
    std::fs::write(&p, r#"{"n": 4, "rank": 2, "bases": [[1,2],[3,4]]}"#).unwrap();
    assert_eq!(run(&["positroid", "--in", path(&p)]).status.code(), Some(2));
    let (code, v) = run_json(&["matroid", "validate", "--in", path(&p)]);
    assert_eq!(code, 1);
    assert!(v["certificate"]["exchange_violation"].is_object());
}

#[test]
fn output_is_deterministic() {
    let (a, t) = (fixture("curve.json"), fixture("toric.json"));
    for args in [
        vec!["curve", "speyer", "--in", path(&a)],
        vec!["curve", "roundtrip", "--in", path(&a)],
        vec!["--seed", "11", "toric-check", "--matrix", path(&t), "--trials", "200"],
        vec!["preservers", "--n", "5", "--c", "2"],
    ] {
        let first = run(&args).stdout;
        let mut jobs1 = vec!["--jobs", "1"];
        jobs1.extend(&args);
        assert_eq!(first, run(&args).stdout);
        assert_eq!(first, run(&jobs1).stdout, "{args:?}");
    }
}

#[test]
fn seed_flag_overrides_environment() {
    let args = ["poly", "binomial", "--a", "1", "--alpha", "2,0,0", "--b", "1", "--beta", "0,2,0"];
    let env_only = Command::new(env!("CARGO_BIN_EXE_trophyp")).args(args).env("TROPHYP_SEED", "5").output().unwrap();
    let v: Value = serde_json::from_slice(&env_only.stdout).unwrap();
    assert_eq!(v["seed"], 5);
    let both = Command::new(env!("CARGO_BIN_EXE_trophyp"))
        .args(["--seed", "7"])
        .args(args)
        .env("TROPHYP_SEED", "5")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&both.stdout).unwrap();
    assert_eq!(v["seed"], 7);
}

fn saved(dir: &tempfile::TempDir, name: &str, args: &[&str]) -> (PathBuf, Value) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(1), "{args:?} should fail");
    let p = dir.path().join(name);
    std::fs::write(&p, &out.stdout).unwrap();
    (p, serde_json::from_slice(&out.stdout).unwrap())
}

#[test]
fn failing_verdicts_verify() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b, c) = (fixture("crossing_matroid.json"), fixture("mixed_signs.json"), fixture("not_mconvex.json"));
    let cases = [
        ("p.json", vec!["positroid", "--in", path(&a)]),
        ("g.json", vec!["grassmannian", "--in", path(&b)]),
        ("m.json", vec!["poly", "mset", "--in", path(&c)]),
    ];
    for (name, args) in &cases {
        let (p, _) = saved(&dir, name, args);
        let (code, v) = run_json(&["verify", "--certificate", path(&p)]);
        assert_eq!(code, 0, "{name}: {v}");
        assert_eq!(v["certificate"]["witness_checked"], true);
        assert_eq!(v["certificate"]["witness_holds"], true);
    }
}

#[test]
fn tampered_certificate_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let (_, mut v) = saved(&dir, "p.json", &["positroid", "--in", path(&fixture("crossing_matroid.json"))]);
    v["certificate"]["certificate"]["crossing"]["witness"] = json!([1, 2, 4, 3]);
    let p = dir.path().join("tampered.json");
    std::fs::write(&p, serde_json::to_vec(&v).unwrap()).unwrap();
    let (code, out) = run_json(&["verify", "--certificate", path(&p)]);
    assert_eq!(code, 1);
    assert_eq!(out["result"], "fail");
    assert_eq!(out["certificate"]["witness_holds"], false);
}

#[test]
fn verdicts_survive_a_round_trip() {
    let (_, v) = run_json(&["toric-check", "--matrix", path(&fixture("toric.json")), "--trials", "50"]);
    let text = serde_json::to_string(&v).unwrap();
    let back: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
    assert_eq!(v["result"], "pass");
    assert_eq!(v["certificate"]["sample"]["violations"], 0);
}

fn cells(svg: &[u8]) -> usize {
    String::from_utf8_lossy(svg).matches("class=\"cell\"").count()
}

#[test]
fn plots_count_maximal_cells() {
    let out = run(&["plot", "--complex", path(&fixture("reciprocal_plane.json"))]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(cells(&out.stdout), 5);
    let out = run(&["plot", "--matroid", path(&fixture("u23.json"))]);
    assert_eq!(cells(&out.stdout), 3);
    assert_eq!(run(&["plot", "--curve", path(&fixture("curve8.json"))]).status.code(), Some(2));
}

#[test]
fn plot_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("u23.svg");
    let out = run(&["plot", "--matroid", path(&fixture("u23.json")), "--out", path(&p)]);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read(&p).unwrap();
    assert!(svg.starts_with(b"<svg"));
    assert_eq!(svg, run(&["plot", "--matroid", path(&fixture("u23.json"))]).stdout);
}

#[test]
fn curve_pipeline_from_the_command_line() {
    let f = fixture("curve.json");
    let (code, v) = run_json(&["curve", "decompose", "--in", path(&f)]);
    assert_eq!(code, 0);
    assert_eq!(v["result"][0]["cycle"], json!([2, 5, 3, 6]));
    assert_eq!(run_json(&["curve", "roundtrip", "--in", path(&f)]).0, 0);
    assert_eq!(run_json(&["curve", "balance", "--in", path(&f)]).0, 0);
    assert_eq!(run_json(&["curve", "shape", "--in", path(&f)]).0, 0);
}
