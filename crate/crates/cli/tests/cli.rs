use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperoct"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn input_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hyperoct-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn sdes_of_the_long_example() {
    let o = run(&["sdes", "--perm", "[-5,-2,-8,1,3,9,4,-6,-7]", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["set"], serde_json::json!([1, 3, 6, 7, 9]));
    assert_eq!(v["signs"], "--++-");
}

#[test]
fn det_weight_small_cases() {
    let o = run(&["det-weight", "--n", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches("-2\n").count(), 2);
    let o = run(&["det-weight", "--n", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["det"], "-128");
    assert_eq!(v["equal"], true);
    let o = run(&["det-weight", "--n", "3", "--alpha", "-3"]);
    assert!(o.status.success());
}

#[test]
fn det_weight_rejects_bad_alpha() {
    assert_eq!(
        run(&["det-weight", "--n", "2", "--alpha", "x/0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["det-weight", "--n", "2", "--matrix", "mix"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = run(&["verify", "gelfand", "--n", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS gelfand: 6 elements"));
    assert_eq!(run(&["verify", "bogus", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn verify_json_is_stable() {
    let a = run(&["verify", "rsk", "--n", "3", "--json", "--seed", "7"]);
    let b = run(&["verify", "rsk", "--n", "3", "--json", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["suite"], "rsk");
    assert_eq!(v["passed"], true);
}

#[test]
fn char_table_of_b2() {
    let o = run(&[
        "char",
        "--n",
        "2",
        "--shape",
        r#"{"lambda":[1],"mu":[1]}"#,
        "--json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"][0]["values"], serde_json::json!([0, 2, 0, 0, -2]));
    let o = run(&["char", "--n", "2", "--shape", r#"{"lambda":[1],"mu":[]}"#]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fine_check_verdicts() {
    let all = input_file("b2.json", "[[1,2],[2,1],[-1,2],[1,-2],[-1,-2],[-2,-1]]");
    let o = run(&["fine-check", "--input", all.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("verdict: fine\n"));

    let words = input_file("words.json", r#"[{"word":"01","count":2}]"#);
    let o = run(&["fine-check", "--input", words.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "not-in-span");

    let desc = input_file(
        "a.json",
        r#"[{"descents":[],"count":1},{"descents":[1],"count":1}]"#,
    );
    let path = desc.to_str().unwrap();
    assert!(
        run(&["fine-check", "--input", path, "--group", "a", "--n", "2"])
            .status
            .success()
    );
    assert_eq!(
        run(&["fine-check", "--input", path, "--group", "a"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn rsk_prints_bitableaux() {
    let o = run(&["rsk", "--perm", "[-2,3,-1]"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["P"]["plus"], serde_json::json!([[3]]));
    assert_eq!(v["P"]["minus"], serde_json::json!([[1], [2]]));
}

#[test]
fn stats_table_is_equidistributed() {
    let o = run(&["stats", "--n", "3", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for row in v["rows"].as_array().unwrap() {
        assert_eq!(row["finv"], row["fmaj"]);
        assert_eq!(row["finv"], row["length"]);
    }
}

#[test]
fn malformed_permutation_is_a_usage_error() {
    assert_eq!(run(&["stats", "--perm", "[1,1]"]).status.code(), Some(2));
    assert_eq!(run(&["sdes", "--perm", "nope"]).status.code(), Some(2));
}
