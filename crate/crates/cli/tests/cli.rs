use std::path::Path;
use std::process::{Command, Output};

fn partlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn eval_point_values() {
    for (parts, n, expected) in [
        ("1,2,4", "6", "6"),
        ("1,2,2,3,3", "4", "8"),
        ("1,2,3,4", "4", "5"),
        ("7", "13", "0"),
    ] {
        let out = partlab(&["eval", "--parts", parts, "--n", n]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), format!("{expected}\n"), "{parts} n={n}");
    }
}

#[test]
fn delta_csv_is_deterministic_and_matches_eval() {
    let args = ["delta-csv", "--parts", "2,3,5,7", "--n-max", "1000"];
    let first = partlab(&args);
    let second = partlab(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,p,delta,sign"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 999);
    assert_eq!(rows[0][0], "2");
    for row in rows.iter().step_by(97) {
        let out = partlab(&["eval", "--parts", "2,3,5,7", "--n", row[0]]);
        assert_eq!(stdout(&out).trim(), row[1], "n={}", row[0]);
    }
    // last non-positive delta below 4000 is at n = 823
    let last = rows.iter().rev().find(|r| r[3] != "1").unwrap();
    assert_eq!(last[0], "823");
}

#[test]
fn delta_csv_all_ones_pair() {
    let out = partlab(&["delta-csv", "--parts", "1,1", "--n-max", "50"]);
    let text = stdout(&out);
    for (i, line) in text.lines().skip(1).enumerate() {
        let n = i + 2;
        assert_eq!(line, format!("{n},{},1,1", n + 1));
    }
}

#[test]
fn delta_csv_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("delta.csv");
    let out = partlab(&[
        "delta-csv",
        "--parts",
        "1,2,3",
        "--n-max",
        "20",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let direct = partlab(&["delta-csv", "--parts", "1,2,3", "--n-max", "20"]);
    assert_eq!(written, stdout(&direct));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = [
        "delta-csv",
        "--parts",
        "1,2,3",
        "--n-max",
        "200",
        "--cache",
        cache,
    ];
    let cold = partlab(&args);
    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1);
    let warm = partlab(&args);
    assert_eq!(cold.stdout, warm.stdout);
    let plain = partlab(&["delta-csv", "--parts", "1,2,3", "--n-max", "200"]);
    assert_eq!(cold.stdout, plain.stdout);

    let evaluated = partlab(&["eval", "--parts", "1,2,3", "--n", "200", "--cache", cache]);
    let uncached = partlab(&["eval", "--parts", "1,2,3", "--n", "200"]);
    assert_eq!(evaluated.stdout, uncached.stdout);
}

#[test]
fn corrupted_cache_is_not_trusted() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["eval", "--parts", "1,2", "--n", "10", "--cache", cache];
    assert_eq!(stdout(&partlab(&args)), "6\n");
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let header = text.lines().next().unwrap();
        std::fs::write(&path, format!("{header}\n1\n2\n")).unwrap();
    }
    let out = partlab(&args);
    assert_eq!(stdout(&out), "6\n");
}

#[test]
fn exit_code_contract() {
    assert_eq!(partlab(&["--help"]).status.code(), Some(0));
    assert_eq!(partlab(&["eval", "--help"]).status.code(), Some(0));
    assert_eq!(partlab(&["eval", "--n", "3"]).status.code(), Some(1));
    assert_eq!(partlab(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        partlab(&["eval", "--parts", "0,1", "--n", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        partlab(&["delta-csv", "--parts", "1,2", "--n-max", "1"])
            .status
            .code(),
        Some(1)
    );
    let bad = partlab(&["thresholds", "--parts", "2,4"]);
    assert_eq!(bad.status.code(), Some(1));

    let failing = partlab(&[
        "scan-logc",
        "--parts",
        "1,2,3",
        "--lo",
        "2",
        "--hi",
        "200",
        "--assert",
    ]);
    assert_eq!(failing.status.code(), Some(2));
    let failing_bo = partlab(&["scan-bo", "--parts", "2,4,6", "--max", "30", "--assert"]);
    assert_eq!(failing_bo.status.code(), Some(2));
    let clean = partlab(&[
        "scan-bo", "--parts", "1,2", "--max", "60", "--from", "9", "--assert",
    ]);
    assert_eq!(clean.status.code(), Some(0));
}

#[test]
fn unwritable_out_path_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("x.csv");
    let out = partlab(&[
        "delta-csv",
        "--parts",
        "1,2",
        "--n-max",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!Path::new(&path).exists());
}

#[test]
fn thresholds_and_classify_json() {
    let out = partlab(&["thresholds", "--parts", "1,2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["bo"]["value"], "26");

    let out = partlab(&["classify", "--parts", "2,4,6"]);
    let v = json(&out);
    assert_eq!(v["bo"], false);
    assert_eq!(v["witness_divisor"], "2");
}

#[test]
fn scan_logc_assert_start() {
    let out = partlab(&[
        "scan-logc",
        "--parts",
        "1,2,3,4,5",
        "--lo",
        "2",
        "--hi",
        "5000",
        "--assert-start",
        "38",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["minimal_start"], "38");

    let early = partlab(&[
        "scan-logc",
        "--parts",
        "1,2,3,4,5",
        "--lo",
        "2",
        "--hi",
        "500",
        "--assert-start",
        "37",
    ]);
    assert_eq!(early.status.code(), Some(2));
}

#[test]
fn rationals_are_strings() {
    let out = partlab(&["qp", "--parts", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"1/2\""));
    let csv = partlab(&["qp", "--parts", "1,2", "--format", "csv"]);
    assert_eq!(
        stdout(&csv),
        "residue,degree,coefficient\n0,0,1\n0,1,1/2\n1,0,1/2\n1,1,1/2\n"
    );
}
