use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_horseshoe"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn table_matches_golden() {
    assert_eq!(
        stdout(&["table", "--period", "8"]),
        golden("table_period_8.tsv")
    );
    assert_eq!(
        stdout(&["--format", "tsv", "table", "--period", "8"]),
        golden("table_period_8.tsv")
    );
}

#[test]
fn classify_json_matches_golden() {
    assert_eq!(
        stdout(&["--format", "json", "classify", "10000011100"]),
        golden("classify_json.txt")
    );
}

#[test]
fn entropy_matches_golden() {
    assert_eq!(
        stdout(&["entropy", "--i", "1", "--q", "1/3", "--bar"]),
        golden("entropy_bar.txt")
    );
}

#[test]
fn single_line_commands() {
    let cases: &[(&[&str], &str)] = &[
        (&["height", "10111100(11)"], "2/5"),
        (&["cq", "3/10"], "10011011001"),
        (&["scope", "."], "1/3"),
        (&["scope", "11"], "2/5"),
        (
            &["rinv", "100010111001010", "1"],
            "mu=1/4 nu=1/3 lambda=1/3 r=1/3",
        ),
        (&["rstar", "10000011100"], "1/3"),
        (&["force", "100010111001010", "1", "1/3"], "THRESHOLD"),
        (&["force", "100010111001010", "1", "2/5"], "FORCED"),
        (&["force", "100010111001010", "1", "1/4"], "NOT-FORCED"),
        (
            &["star", "1/3", "2/5", "1/4"],
            "code=100010110 r=1/4 expected=1/4",
        ),
        (
            &["family", "r-seq", "10000011100", "4"],
            "1/3 1/3 1/3 1/3 1/3",
        ),
        (&["family", "pa", "100111111"], "CERTIFIED i=1 r=1/3"),
        (
            &["scan", "--w", "1", "--q", "1/3", "--n", "10"],
            "16/99 0.161616",
        ),
    ];
    for (args, want) in cases {
        assert_eq!(stdout(args).trim_end(), *want, "{args:?}");
    }
}

#[test]
fn json_rinv() {
    let out = stdout(&["--format", "json", "rinv", "100010111001010", "1"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["r"], "1/3");
    assert_eq!(v["mu"], "1/4");
}

#[test]
fn lone_listing() {
    assert_eq!(stdout(&["lone", "--max-len", "2"]), ".\n0\n1\n00\n11\n");
    assert_eq!(run(&["lone", "--max-len", "6"]).status.code(), Some(1));
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        &["cq", "1/0"][..],
        &["rinv", "1012", "1"],
        &["height", "10(11"],
        &["bogus"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn domain_errors_exit_1() {
    let out = run(&["force", "100010111001010", "1", "1/2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: computation failed"));
    assert_eq!(
        run(&["entropy", "--i", "1", "--q", "1/2"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["rinv", "1010", "1"]).status.code(), Some(2));
}
