use std::fs;
use std::process::{Command, Output};

use tempfile::tempdir;

fn maxlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn reproduces_discrete_example() {
    let o = maxlab(&["reproduce", "example-4.1", "--t", "2", "--p", "2", "--N", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let value: f64 = row[3].parse().unwrap();
    let bound: f64 = row[4].parse().unwrap();
    assert!((value - 1.5f64.sqrt()).abs() < 1e-5);
    assert!((value - bound).abs() <= 1e-5);
}

#[test]
fn constants_row() {
    let o = maxlab(&["constants", "--p", "2", "--L", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("besicovitch,2,5,1.09544511501033"));
}

#[test]
fn malformed_measure_exits_with_input_error() {
    let dir = tempdir().unwrap();
    let measure = dir.path().join("m.json");
    let function = dir.path().join("f.json");
    fs::write(&measure, r#"{"atoms": [{"x": "0", "w": "one"}], "density": {"breakpoints": [], "values": ["1"]}}"#)
        .unwrap();
    fs::write(&function, r#"{"breakpoints": ["0", "1"], "values": ["1"]}"#).unwrap();
    let o = maxlab(&[
        "ratio",
        "--measure",
        measure.to_str().unwrap(),
        "--function",
        function.to_str().unwrap(),
        "--p",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("atoms[0]"), "{err}");
    fs::write(&measure, "{").unwrap();
    let o = maxlab(&[
        "ratio",
        "--measure",
        measure.to_str().unwrap(),
        "--function",
        function.to_str().unwrap(),
        "--p",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cover_then_verify_round_trip() {
    let dir = tempdir().unwrap();
    let function = dir.path().join("f.json");
    fs::write(&function, r#"{"breakpoints": ["0", "1", "2", "3"], "values": ["1", "0", "1"]}"#).unwrap();
    let f = function.to_str().unwrap();
    let o = maxlab(&["cover", "--measure", "lebesgue", "--function", f, "--t", "1/2", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let family = dir.path().join("family.json");
    fs::write(&family, stdout(&o)).unwrap();
    let o = maxlab(&["verify", "--measure", "lebesgue", "--function", f, "--family", family.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let text = fs::read_to_string(&family).unwrap().replacen("\"average\": \"1/2\"", "\"average\": \"1/3\"", 1);
    fs::write(&family, text).unwrap();
    let o = maxlab(&["verify", "--measure", "lebesgue", "--function", f, "--family", family.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempdir().unwrap();
    let function = dir.path().join("f.json");
    fs::write(&function, r#"{"breakpoints": ["0", "1"], "values": ["1"]}"#).unwrap();
    let f = function.to_str().unwrap();
    let runs: Vec<String> = (0..2)
        .map(|_| {
            stdout(&maxlab(&[
                "eval",
                "--measure",
                "lebesgue",
                "--function",
                f,
                "--from",
                "-2",
                "--to",
                "3",
                "--steps",
                "50",
            ]))
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    assert!(runs[0].starts_with("x,value,value_exact,witness\n-2,0.333333333333333,1/3,"));

    let search = |seed: &str| {
        stdout(&maxlab(&[
            "--seed",
            seed,
            "--format",
            "json",
            "search-min-ratio",
            "--p",
            "2",
            "--pieces",
            "2",
            "--budget",
            "60",
        ]))
    };
    assert_eq!(search("5"), search("5"));
}

#[test]
fn writes_files_and_plots() {
    let dir = tempdir().unwrap();
    let out = dir.path().join("out");
    let o = maxlab(&[
        "--output-dir",
        out.to_str().unwrap(),
        "--plot",
        "search-min-ratio",
        "--p",
        "2",
        "--pieces",
        "2",
        "--budget",
        "40",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(fs::read_to_string(out.join("search_min_ratio.csv")).unwrap().starts_with("experiment,p,t_or_seed"));
    assert!(fs::read_to_string(out.join("search_history.svg")).unwrap().starts_with("<svg"));
}

#[test]
fn sunrise_and_one_atom_example() {
    let dir = tempdir().unwrap();
    let function = dir.path().join("f.json");
    fs::write(&function, r#"{"breakpoints": ["0", "1"], "values": ["1"]}"#).unwrap();
    let o = maxlab(&["sunrise-check", "--measure", "lebesgue", "--function", function.to_str().unwrap(), "--t", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1/2,1,1,0,1,1,\"(-1, 1)\""));
    let o = maxlab(&["reproduce", "example-final", "--t", "3", "--p", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(maxlab(&["constants", "--p", "0.5"]).status.code() == Some(2));
}
