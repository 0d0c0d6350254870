//! The installed binary: exit codes, streams and output shapes.

use std::process::{Command, Output};

fn gr3937(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gr3937"))
        .args(args)
        .output()
        .expect("run gr3937")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_one_json_object() {
    let o = gr3937(&[
        "eval", "--kind", "cos", "--method", "original", "-p", "-2", "-b", "1", "-m", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    // The printed formula carries the sign error here.
    let re: f64 = v["value"]["re"].as_f64().unwrap();
    assert!((re - 4.476_509_869_537_685).abs() < 1e-12, "{re}");
    assert_eq!(v["method"], "OriginalBessel");
    assert_eq!(v["params"]["m"], 1);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| gr3937(args).status.code();
    assert_eq!(code(&["list"]), Some(0));
    assert_eq!(code(&["--version"]), Some(0));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["eval", "-m", "-1"]), Some(2));
    assert_eq!(
        code(&["eval", "--method", "original", "-p", "1+i"]),
        Some(2)
    );
    // Y = 0 makes the original formula inapplicable.
    let o = gr3937(&[
        "eval", "--method", "original", "-p", "1", "-b", "1", "-m", "2",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("Y=0"));
    // The oracle's magnitude envelope is an input precondition.
    assert_eq!(code(&["eval", "--method", "oracle", "-p", "60"]), Some(3));
}

#[test]
fn scan_csv_matches_the_p_less_than_b_law() {
    let o = gr3937(&["scan", "-m", "1", "--grid", "p=-3:3:13,b=-3:3:13"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("x,y,case1,case2,case3,overall,flip_applies")
    );
    let rows: Vec<_> = lines.collect();
    assert_eq!(rows.len(), 169);
    for row in rows {
        let f: Vec<&str> = row.split(',').collect();
        let (p, b): (f64, f64) = (f[0].parse().unwrap(), f[1].parse().unwrap());
        assert_eq!(f[5] == "true", p < b, "{row}");
    }
}

#[test]
fn audit_json_lines() {
    let o = gr3937(&["audit", "-m", "1", "--grid", "p=-2:2:5", "-b", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let verdicts: Vec<String> = stdout(&o)
        .lines()
        .map(|l| {
            serde_json::from_str::<serde_json::Value>(l).unwrap()["verdict"]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    // p = -1 is X = 0 (component vanishes), p = 1 is Y = 0.
    assert_eq!(
        verdicts,
        [
            "SignFlip",
            "Agree",
            "SignFlip",
            "OriginalInapplicable",
            "Agree"
        ]
    );
}

#[test]
fn verify_json_and_expected_failure_mode() {
    let o = gr3937(&["verify", "--json", "--samples", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["entries"].as_array().unwrap().len(), 13);
    assert_eq!(v["random"]["samples"], 20);

    let o = gr3937(&[
        "verify",
        "--p-negative",
        "--entry",
        "GR-3.937-4-original",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["random"].is_null());
    assert!(v["entries"][0]["sign_flips"].as_u64().unwrap() > 0);
}

#[test]
fn verify_fails_with_an_impossible_tolerance() {
    let o = gr3937(&["verify", "--entry", "GR-3.936-1", "--tol", "1e-17"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}
