//! End-to-end checks of the `smarandache` binary: outputs, exit codes,
//! format equivalence, byte stability and checkpoint resume.

use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value as Json;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smarandache"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn eval_examples() {
    let o = run(&["eval", "S", "6"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "3\n"));

    let o = run(&["eval", "SK", "3"]);
    assert_eq!(
        (code(&o), stdout(&o).as_str()),
        (0, "provably-none: stable-nonzero-residue\n")
    );

    let o = run(&["eval", "SNTP", "9", "--prime-bound", "997"]);
    assert_eq!(
        (code(&o), stdout(&o).as_str()),
        (2, "not-found-within 997\n")
    );

    let o = run(&["eval", "Sk", "72", "--k", "2"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "12\n"));

    let o = run(&["eval", "mpow-comp", "12", "--m", "3"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "18\n"));

    let o = run(&["eval", "SI2-sigma", "4", "--threshold", "11"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "3\n"));

    let o = run(&["--format", "jsonl", "eval", "SK", "3"]);
    let j: Json = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(j["outcome"], "provably-none");
    assert_eq!(j["reason"], "stable-nonzero-residue");
    assert_eq!(j["argument"], 3);
}

#[test]
fn eval_errors() {
    for args in [
        &["eval", "S", "0"][..],
        &["eval", "nope", "5"],
        &["eval", "SK", "4"],
        &["eval", "Sk", "8"],
        &["eval", "S"],
        &["frobnicate"],
    ] {
        let o = run(args);
        assert_eq!(code(&o), 1, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let o = run(&["--help"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("conjecture"));
}

#[test]
fn seq_examples() {
    let o = run(&["seq", "ISp", "2", "12"]);
    assert_eq!(code(&o), 0);
    let values: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split_once(',').unwrap().1.to_owned())
        .collect();
    assert_eq!(values.join(","), "2,3,3,5,5,7,7,7,7,11,11");

    let o = run(&["seq", "Sdf", "1", "16"]);
    let values: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split_once(',').unwrap().1.to_owned())
        .collect();
    assert_eq!(values.join(","), "1,2,3,4,5,6,7,4,9,10,11,6,13,14,5,6");

    let o = run(&["seq", "S", "1", "1"]);
    assert_eq!(stdout(&o), "argument,value\n1,1\n");

    // SK is defined on primes only; the range is walked over primes.
    let o = run(&["seq", "SK", "2", "12"]);
    let text = stdout(&o);
    let args: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(args, ["2", "3", "5", "7", "11"]);

    let o = run(&["seq", "S", "5", "4"]);
    assert_eq!(code(&o), 1);
    let o = run(&["seq", "ISp", "0", "3"]);
    assert_eq!(code(&o), 1);
}

/// (argument, value-or-outcome) pairs parsed from either output format.
fn records(format: &str, function: &str, from: &str, to: &str) -> BTreeSet<(u64, String)> {
    let o = run(&["--format", format, "seq", function, from, to]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    match format {
        "csv" => text
            .lines()
            .skip(1)
            .map(|l| {
                let (a, v) = l.split_once(',').unwrap();
                (a.parse().unwrap(), v.to_owned())
            })
            .collect(),
        _ => text
            .lines()
            .map(|l| {
                let j: Json = serde_json::from_str(l).unwrap();
                let rendered = if let Some(v) = j.get("value") {
                    v.to_string()
                } else {
                    match j["outcome"].as_str().unwrap() {
                        "not-found-within" => format!("not-found-within {}", j["bound"]),
                        other => format!("{other}: {}", j["reason"].as_str().unwrap()),
                    }
                };
                (j["argument"].as_u64().unwrap(), rendered)
            })
            .collect(),
    }
}

#[test]
fn csv_and_jsonl_agree() {
    for (f, from, to) in [
        ("S", "1", "200"),
        ("SNTP", "1", "40"),
        ("SK", "2", "100"),
        ("sq-comp", "1", "50"),
    ] {
        assert_eq!(
            records("csv", f, from, to),
            records("jsonl", f, from, to),
            "{f}"
        );
    }
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &["seq", "Z", "1", "500"][..],
        &["--format", "jsonl", "verify", "--all"],
        &["conjecture", "radu", "--limit", "20000"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn verify_examples() {
    let o = run(&["verify", "sdf-5.1"]);
    assert_eq!(code(&o), 0);
    let rows: Vec<String> = stdout(&o).lines().skip(1).map(str::to_owned).collect();
    assert_eq!(rows.len(), 16);
    assert!(rows.iter().all(|r| r.ends_with(",confirmed")));

    let o = run(&["verify", "z-5.5"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).lines().any(|l| l == "z-5.5,4,3,7,mismatch"));

    let o = run(&["verify", "--all"]);
    assert_eq!(code(&o), 3);
    let out = stdout(&o);
    assert!(out
        .lines()
        .any(|l| l == "sk-5.2,3,4,provably-none: stable-nonzero-residue,mismatch"));
    assert!(out
        .lines()
        .any(|l| l == "sntp-5.6,9,?,not-found-within 997,undecided"));
    assert!(stderr(&o).contains("mismatch:"));

    let o = run(&["verify", "--list"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l == "sqcomp-6.3a"));

    let o = run(&["verify", "no-such-table"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn conjecture_examples() {
    let o = run(&["conjecture", "tutescu", "--limit", "2"]);
    assert_eq!(
        (code(&o), stdout(&o).as_str()),
        (0, "tutescu: 0 solutions up to 2\n")
    );
    assert!(stderr(&o).contains("elapsed"));

    let o = run(&["conjecture", "tutescu", "--limit", "1000000"]);
    assert_eq!(
        (code(&o), stdout(&o).as_str()),
        (0, "tutescu: 0 solutions up to 1000000\n")
    );

    let o = run(&["conjecture", "radu", "--limit", "100000"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let (solutions, summary) = out.trim_end().rsplit_once('\n').unwrap();
    let count = solutions.lines().count();
    assert_eq!(summary, format!("radu: {count} solutions up to 100000"));

    for args in [
        &["conjecture", "radu", "--limit", "1"][..],
        &["conjecture", "goldbach"],
    ] {
        assert_eq!(code(&run(args)), 1, "{args:?}");
    }
}

#[test]
fn conjecture_resumes_from_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("radu.json");
    let cp = cp.to_str().unwrap();

    let full = run(&["conjecture", "radu", "--limit", "250000"]);
    let first = run(&[
        "conjecture",
        "radu",
        "--limit",
        "250000",
        "--checkpoint",
        cp,
    ]);
    assert_eq!(first.stdout, full.stdout);

    // Rewind the saved state to the first block boundary, as if interrupted.
    let mut state: Json = serde_json::from_str(&std::fs::read_to_string(cp).unwrap()).unwrap();
    assert_eq!(state["next"], 250_001);
    state["next"] = 100_000.into();
    let kept: Vec<Json> = state["solutions"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|n| n.as_u64().unwrap() < 100_000)
        .cloned()
        .collect();
    state["solutions"] = kept.into();
    std::fs::write(cp, state.to_string()).unwrap();

    let resumed = run(&[
        "conjecture",
        "radu",
        "--limit",
        "250000",
        "--checkpoint",
        cp,
    ]);
    assert_eq!(code(&resumed), 0);
    assert_eq!(resumed.stdout, full.stdout);

    // A checkpoint for another scan is refused.
    let o = run(&[
        "conjecture",
        "tutescu",
        "--limit",
        "250000",
        "--checkpoint",
        cp,
    ]);
    assert_eq!(code(&o), 1);
}

#[test]
fn pi_examples() {
    let o = run(&["pi", "100"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "25 25 agree\n"));
    let o = run(&["pi", "4"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "2 2 agree\n"));
    let o = run(&["pi", "3"]);
    assert_eq!(code(&o), 1);
}
