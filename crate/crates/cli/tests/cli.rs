use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use orthodiff::format::{DiffOpJson, PolyJson};
use orthodiff_core::{Poly, Rational};
use serde_json::{json, Value};
use tempfile::TempDir;

fn orthodiff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orthodiff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &TempDir, name: &str, value: &Value) -> String {
    let path = dir.path().join(name);
    fs::write(&path, value.to_string()).unwrap();
    path.to_str().unwrap().to_owned()
}

fn last_coeffs(out: &Output) -> Value {
    stdout_json(out).as_array().unwrap().last().unwrap()["coeffs"].clone()
}

#[test]
fn gen_families() {
    let out = orthodiff(&["gen", "--family", "hermite-gen", "--alpha", "1", "--n", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(last_coeffs(&out), json!(["3", "0", "-6", "0", "1"]));

    let out = orthodiff(&["gen", "--family", "laguerre", "--alpha", "0", "--n", "2"]);
    assert_eq!(last_coeffs(&out), json!(["1", "-2", "1/2"]));

    let out = orthodiff(&["gen", "--family", "hermite-std", "--n", "0"]);
    assert_eq!(stdout_json(&out), json!([{ "coeffs": ["1"] }]));
}

#[test]
fn gen_exp_op_is_scaled_shifted_hermite() {
    // 2·e^{−D²/2 − D} x² = 2((x − 1)² − 1)
    let out = orthodiff(&[
        "gen", "--family", "exp-op", "--gamma0", "2", "--alpha", "1", "--beta", "1", "--n", "2",
    ]);
    assert_eq!(last_coeffs(&out), json!(["0", "-4", "2"]));

    let out = orthodiff(&[
        "gen",
        "--family",
        "hermite-gen",
        "--alpha",
        "0+1*i",
        "--n",
        "2",
        "--format",
        "plain",
    ]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .ends_with("P_2 = x^2 + (0-1*i)\n"));
}

#[test]
fn gen_csv_table() {
    let out = orthodiff(&["gen", "--family", "laguerre", "--n", "2", "--format", "csv"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "n,x^0,x^1,x^2\n0,1,0,0\n1,1,-1,0\n2,1,-2,1/2\n"
    );
}

#[test]
fn gen_from_recurrence_files() {
    let dir = TempDir::new().unwrap();
    let monic = write(
        &dir,
        "monic.json",
        &json!({"kind": "monic", "p0": "1", "c": [null, "0", "0", "0"], "lam": [null, null, "1", "2"]}),
    );
    let out = orthodiff(&["gen", "--family", "ttr", "--in", &monic, "--n", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(last_coeffs(&out), json!(["0", "-3", "0", "1"]));

    // Physicists' Hermite: H_{n+1} = 2x H_n − 2n H_{n−1}.
    let general = write(
        &dir,
        "general.json",
        &json!({"kind": "general", "p0": "1", "a": ["2", "2", "2"], "b": ["0", "0", "0"], "c": [null, "2", "4"]}),
    );
    let out = orthodiff(&["gen", "--family", "ttr", "--in", &general, "--n", "3"]);
    let std = orthodiff(&["gen", "--family", "hermite-std", "--n", "3"]);
    assert_eq!(out.stdout, std.stdout);

    // A table too short for the requested degree.
    let out = orthodiff(&["gen", "--family", "ttr", "--in", &monic, "--n", "5"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn gen_usage_errors() {
    for args in [
        &["gen", "--family", "jacobi", "--n", "3"][..],
        &["gen", "--family", "laguerre", "--alpha", "1/0"],
        &["gen", "--family", "ttr", "--n", "3"],
        &["gen", "--family", "hermite-std", "--n", "-1"],
    ] {
        assert_eq!(code(&orthodiff(args)), 2, "{args:?}");
    }
}

#[test]
fn classify_files() {
    let dir = TempDir::new().unwrap();
    let hermite = write(
        &dir,
        "h.json",
        &json!({"gammas": ["1", "0", "-1", "0", "3"]}),
    );
    let out = orthodiff(&["classify", "--in", &hermite]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout_json(&out),
        json!({"verdict": "exp_form", "gamma0": "1", "alpha": "1", "beta": "0"})
    );

    let factorial = write(&dir, "f.json", &json!({"gammas": ["1", "1", "2", "6"]}));
    let out = orthodiff(&["classify", "--in", &factorial]);
    assert_eq!(code(&out), 1);
    assert_eq!(
        stdout_json(&out),
        json!({"verdict": "not_ops", "index": 3, "reason": "recursion"})
    );

    let empty = write(&dir, "e.json", &json!({"gammas": []}));
    assert_eq!(code(&orthodiff(&["classify", "--in", &empty])), 2);

    let short = write(&dir, "s.json", &json!({"gammas": ["1", "0"]}));
    assert_eq!(code(&orthodiff(&["classify", "--in", &short])), 2);

    let missing = dir.path().join("missing.json");
    assert_eq!(
        code(&orthodiff(&["classify", "--in", missing.to_str().unwrap()])),
        2
    );

    assert_eq!(
        code(&orthodiff(&[
            "classify", "--in", &hermite, "--format", "csv"
        ])),
        2
    );
    assert_eq!(
        code(&orthodiff(&["classify", "--in", &hermite, "--n", "9"])),
        2
    );
}

#[test]
fn classify_parameters_round_trip() {
    let out = orthodiff(&[
        "classify", "--gamma0", "2", "--alpha", "-1/3", "--beta", "5", "--n", "12",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout_json(&out),
        json!({"verdict": "exp_form", "gamma0": "2", "alpha": "-1/3", "beta": "5"})
    );

    let out = orthodiff(&[
        "classify", "--alpha", "1+1*i", "--beta", "-2", "--format", "plain",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "exp_form gamma0=1 alpha=1+1*i beta=-2 (consistent up to n=10)\n"
    );

    let out = orthodiff(&["classify", "--alpha", "0", "--beta", "1"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["reason"], "alpha_zero");

    let out = orthodiff(&["classify", "--gamma0", "0", "--alpha", "1"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["index"], 0);
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "--suite", "laguerre", "--n", "25"][..],
        &[
            "verify",
            "--suite",
            "main-theorem",
            "--n",
            "25",
            "--seed",
            "7",
        ],
        &["verify", "--suite", "roots", "--n", "15"],
    ] {
        let out = orthodiff(args);
        let text = String::from_utf8(out.stdout.clone()).unwrap();
        assert_eq!(code(&out), 0, "{args:?}\n{text}");
        let lines: Vec<_> = text.lines().collect();
        assert!(lines.len() >= 5);
        assert!(lines[..lines.len() - 1]
            .iter()
            .all(|l| l.starts_with("PASS  ")));
        assert!(lines.last().unwrap().ends_with(" 0 failed"));
    }
}

#[test]
fn verify_json_report() {
    let out = orthodiff(&["verify", "--n", "6", "--seed", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["suite"], "all");
    assert_eq!(report["passed"], true);
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 14);
    for c in checks {
        assert_eq!(c["passed"], true);
        assert!(!c["anchor"].as_str().unwrap().is_empty());
    }
}

#[test]
fn verify_usage_errors() {
    assert_eq!(
        code(&orthodiff(&[
            "verify",
            "--suite",
            "main-theorem",
            "--n",
            "2"
        ])),
        2
    );
    assert_eq!(code(&orthodiff(&["verify", "--suite", "proofs"])), 2);
    assert_eq!(
        code(&orthodiff(&["verify", "--format", "csv", "--n", "3"])),
        2
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--n", "8", "--seed", "11", "--format", "json"];
    let first = orthodiff(&args);
    let second = orthodiff(&args);
    assert_eq!(first.stdout, second.stdout);
    // A different seed draws different random instances but the same checks.
    let other = orthodiff(&["verify", "--n", "8", "--seed", "12", "--format", "json"]);
    assert_eq!(stdout_json(&other)["checks"].as_array().unwrap().len(), 14);

    let gen = [
        "gen", "--family", "exp-op", "--alpha", "3/7", "--beta", "-2", "--n", "12",
    ];
    assert_eq!(orthodiff(&gen).stdout, orthodiff(&gen).stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("report.txt");
    let args = ["verify", "--suite", "laguerre", "--n", "5"];
    let out = orthodiff(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    assert_eq!(fs::read(&path).unwrap(), orthodiff(&args).stdout);
}

#[test]
fn laguerre_operator_outputs() {
    let out = orthodiff(&["laguerre-op", "--n", "3", "--format", "csv"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "r,a_r\n0,1\n1,-2\n2,7/2\n3,-17/3\n"
    );

    // The emitted operator sends x^n to the emitted Laguerre polynomials.
    let op: DiffOpJson =
        serde_json::from_slice(&orthodiff(&["laguerre-op", "--n", "8"]).stdout).unwrap();
    let op = op.to_diffop::<Rational>().unwrap();
    let family: Vec<PolyJson> =
        serde_json::from_slice(&orthodiff(&["gen", "--family", "laguerre", "--n", "8"]).stdout)
            .unwrap();
    for (n, l) in family.iter().enumerate() {
        let image = op.apply(&Poly::monomial(Rational::from(1), n));
        assert_eq!(image, l.to_poly::<Rational>().unwrap());
    }
}

fn roots_of(dir: &TempDir, coeffs: &[&str]) -> Output {
    let path = write(dir, "p.json", &json!({ "coeffs": coeffs }));
    orthodiff(&["roots", "--in", &path])
}

#[test]
fn roots_reports() {
    let dir = TempDir::new().unwrap();
    let out = roots_of(&dir, &["-2", "0", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout_json(&out),
        json!({
            "degree": 2,
            "distinct_real_roots": 2,
            "all_roots_real": true,
            "isolating_intervals": [["-4", "0"], ["0", "4"]]
        })
    );

    // (x − 1)²(x + 2): the repeated root counts once.
    let report = stdout_json(&roots_of(&dir, &["2", "-3", "0", "1"]));
    assert_eq!(report["degree"], 3);
    assert_eq!(report["distinct_real_roots"], 2);
    assert_eq!(report["all_roots_real"], true);
    assert_eq!(
        report["isolating_intervals"],
        json!([["-4", "0"], ["0", "4"]])
    );

    // x(x − 2): 0 is the right end of (−4, 0] and is reported exactly.
    let report = stdout_json(&roots_of(&dir, &["0", "-2", "1"]));
    assert_eq!(
        report["isolating_intervals"],
        json!([["0", "0"], ["0", "4"]])
    );

    let report = stdout_json(&roots_of(&dir, &["1", "0", "1"]));
    assert_eq!(report["distinct_real_roots"], 0);
    assert_eq!(report["all_roots_real"], false);

    assert_eq!(code(&roots_of(&dir, &[])), 2);
    assert_eq!(code(&roots_of(&dir, &["1", "1*i"])), 2);
    assert!(Path::new(&dir.path().join("p.json")).exists());
}
