//! End-to-end tests of the binary: spec examples, output formats,
//! determinism, and the exit-code contract (0 success, 1 domain error,
//! 2 usage error).

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trikernel"))
        .args(args)
        .env_remove("TRIKERNEL_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn direct_chebyshev_rows() {
    let text = stdout_of(&["direct", "--family", "chebyshev-t", "--n-max", "4"]);
    assert!(text.contains("method: direct"));
    assert!(text.lines().last().unwrap().ends_with("| 8 -8 1"));

    let single = stdout_of(&["direct", "--family", "chebyshev-t", "--n-max", "0"]);
    assert!(single.ends_with("0 | 1\n"));
}

#[test]
fn inverse_reproduces_worked_example_row() {
    let csv = stdout_of(&[
        "inverse",
        "--spec",
        &fixture("paper-example.json"),
        "--n-max",
        "6",
        "--format",
        "csv",
    ]);
    let row6: Vec<&str> = csv
        .lines()
        .filter(|line| line.starts_with("6,"))
        .map(|line| line.rsplit(',').next().unwrap())
        .collect();
    assert_eq!(row6, ["1", "3", "-1", "4", "26", "25", "-40/7"]);
}

#[test]
fn inverse_method_all_reports_consistency() {
    let out = run(&[
        "inverse",
        "--family",
        "chebyshev-t",
        "--n-max",
        "8",
        "--method",
        "all",
    ]);
    assert_eq!(exit_code(&out), 0);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("consistency: orthogonality = determinant = recurrence"));

    let out = run(&[
        "inverse", "--family", "laguerre", "--n-max", "6", "--method", "all",
    ]);
    assert_eq!(exit_code(&out), 0);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("recurrence not applicable: h depends on k"));
}

#[test]
fn inverse_methods_match_each_other() {
    let by = |method: &str| {
        stdout_of(&[
            "inverse", "--family", "legendre", "--n-max", "10", "--method", method, "--format",
            "csv",
        ])
        .replace("orthogonality", "")
        .replace("determinant", "")
        .replace("recurrence", "")
    };
    assert_eq!(by("orthogonality"), by("determinant"));
    assert_eq!(by("orthogonality"), by("recurrence"));
}

#[test]
fn exit_codes() {
    // domain errors
    let out = run(&["inverse", "--family", "fibonacci", "--n-max", "6"]);
    assert_eq!(exit_code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("n = 0"));

    let out = run(&[
        "inverse",
        "--family",
        "laguerre",
        "--n-max",
        "6",
        "--method",
        "recurrence",
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("h depends on k"));

    // explicit tables carry no recurrence data
    let out = run(&[
        "inverse",
        "--spec",
        &fixture("paper-example.json"),
        "--n-max",
        "6",
        "--method",
        "recurrence",
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("explicit-table"));

    let out = run(&[
        "change",
        "--from",
        "chebyshev-t",
        "--to",
        "laguerre",
        "--n-max",
        "4",
    ]);
    assert_eq!(exit_code(&out), 1);

    let out = run(&["direct", "--family", "jacobi", "--n-max", "4"]);
    assert_eq!(exit_code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("valid names"));

    let out = run(&["direct", "--spec", "/no/such/file.json", "--n-max", "4"]);
    assert_eq!(exit_code(&out), 1);

    // malformed expression inside a spec file: the error carries the
    // byte offset within the expression source
    let bad = std::env::temp_dir().join(format!("trikernel-bad-{}.json", std::process::id()));
    std::fs::write(
        &bad,
        r#"{"m": 2, "initial": ["1", "1"], "p": "2 +", "h": "1"}"#,
    )
    .unwrap();
    let out = run(&["direct", "--spec", bad.to_str().unwrap(), "--n-max", "4"]);
    std::fs::remove_file(&bad).ok();
    assert_eq!(exit_code(&out), 1);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("byte 3"), "got: {stderr}");

    // usage errors
    let out = run(&["direct", "--n-max", "4"]);
    assert_eq!(exit_code(&out), 2);

    let out = run(&["direct", "--family", "chebyshev-t"]);
    assert_eq!(exit_code(&out), 2);

    let out = run(&["direct", "--family", "chebyshev-t", "--n-max", "600"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("TRIKERNEL_MAX_N"));
}

#[test]
fn max_n_env_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_trikernel"))
        .args(["direct", "--family", "chebyshev-t", "--n-max", "600"])
        .env("TRIKERNEL_MAX_N", "1024")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0);

    let out = Command::new(env!("CARGO_BIN_EXE_trikernel"))
        .args(["direct", "--family", "chebyshev-t", "--n-max", "4"])
        .env("TRIKERNEL_MAX_N", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn deterministic_output() {
    let args = [
        "inverse",
        "--family",
        "hermite-h",
        "--n-max",
        "9",
        "--format",
        "json",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["verify", "--family", "chebyshev-u", "--n-max", "8"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn json_and_csv_carry_the_same_values() {
    let json = stdout_of(&[
        "inverse",
        "--family",
        "chebyshev-t",
        "--n-max",
        "8",
        "--format",
        "json",
    ]);
    let csv = stdout_of(&[
        "inverse",
        "--family",
        "chebyshev-t",
        "--n-max",
        "8",
        "--format",
        "csv",
    ]);

    // pull the row arrays out of the JSON payload
    let rows_part = json.split("\"rows\":[").nth(1).unwrap().trim_end();
    let rows_part = rows_part.strip_suffix("]}").unwrap();
    let mut json_values = Vec::new();
    for row in rows_part.split("],").map(|r| r.trim_matches(['[', ']'])) {
        for cell in row.split(',') {
            json_values.push(cell.trim_matches('"').to_string());
        }
    }

    let csv_values: Vec<String> = csv
        .lines()
        .skip(1)
        .map(|line| line.rsplit(',').next().unwrap().to_string())
        .collect();
    assert_eq!(json_values, csv_values);
    assert!(json.starts_with("{\"family\":\"chebyshev-t\",\"m\":2,\"n_max\":8,"));
}

#[test]
fn change_examples() {
    let text = stdout_of(&[
        "change",
        "--from",
        "chebyshev-u",
        "--to",
        "chebyshev-t",
        "--n-max",
        "2",
    ]);
    assert!(text.ends_with("2 | 2 1\n"));

    // identity change: every row is 1 followed by zeros
    let csv = stdout_of(&[
        "change", "--from", "legendre", "--to", "legendre", "--n-max", "8", "--format", "csv",
    ]);
    for line in csv.lines().skip(1) {
        let mut parts = line.split(',');
        let _n = parts.next().unwrap();
        let k: u32 = parts.next().unwrap().parse().unwrap();
        let value = parts.next().unwrap();
        assert_eq!(value, if k == 0 { "1" } else { "0" });
    }

    // recurrence method equals convolution method
    let conv = stdout_of(&[
        "change",
        "--from",
        "hermite-h",
        "--to",
        "hermite-he",
        "--n-max",
        "10",
        "--format",
        "csv",
    ]);
    let rec = stdout_of(&[
        "change",
        "--from",
        "hermite-h",
        "--to",
        "hermite-he",
        "--n-max",
        "10",
        "--method",
        "recurrence",
        "--format",
        "csv",
    ]);
    assert_eq!(conv, rec);
}

#[test]
fn cross_examples() {
    let text = stdout_of(&[
        "cross",
        "--from",
        "chebyshev-t",
        "--to",
        "laguerre",
        "--n",
        "2",
    ]);
    assert!(text.contains("m1: 2"));
    assert!(text.contains("m2: 1"));
    assert!(text.ends_with("2 | 3 -8 4\n"));

    // same order: gcd congruence forces zeros at odd offsets
    let csv = stdout_of(&[
        "cross",
        "--from",
        "chebyshev-u",
        "--to",
        "chebyshev-t",
        "--n",
        "6",
        "--format",
        "csv",
    ]);
    for line in csv.lines().skip(1) {
        let mut parts = line.split(',');
        let n: i64 = parts.next().unwrap().parse().unwrap();
        let r: i64 = parts.next().unwrap().parse().unwrap();
        let value = parts.next().unwrap();
        if (n - r) % 2 != 0 {
            assert_eq!(value, "0", "r = {r}");
        }
    }
}

#[test]
fn expand_examples() {
    let text = stdout_of(&["expand", "--poly", "0,0,1", "--family", "chebyshev-t"]);
    assert!(text.contains("verified: true"));
    assert!(text.ends_with("2 | 1/2 0 1/2\n"));

    // worked-example family has f_0 = 7: the constant 1 picks up the
    // inverse boundary coefficient 1/7, and the constant 7 expands to
    // exactly one copy of f_0
    let text = stdout_of(&[
        "expand",
        "--poly",
        "1",
        "--spec",
        &fixture("paper-example.json"),
    ]);
    assert!(text.ends_with("0 | 1/7\n"));
    let text = stdout_of(&[
        "expand",
        "--poly",
        "7",
        "--spec",
        &fixture("paper-example.json"),
    ]);
    assert!(text.contains("verified: true"));
    assert!(text.ends_with("0 | 1\n"));

    // zero polynomial: no coefficients
    let csv = stdout_of(&[
        "expand",
        "--poly",
        "0",
        "--family",
        "chebyshev-t",
        "--format",
        "csv",
    ]);
    assert_eq!(csv, "n,k,value\n");

    let out = run(&["expand", "--poly", "1,oops", "--family", "chebyshev-t"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn verify_exit_contract() {
    let out = run(&["verify", "--family", "legendre", "--n-max", "16"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("result: all checks passed"));

    let out = run(&["verify", "--family", "fibonacci", "--n-max", "8"]);
    assert_eq!(exit_code(&out), 1);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("admissible: fail"));

    let out = run(&[
        "verify",
        "--spec",
        &fixture("paper-example.json"),
        "--n-max",
        "6",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("monomial reconstruction: pass"));
}

#[test]
fn verify_vanishing_lines_enumerate_multiples() {
    let text =
        String::from_utf8(run(&["verify", "--family", "chebyshev-t", "--n-max", "12"]).stdout)
            .unwrap();
    for n in [2, 4, 6, 8, 10, 12] {
        assert!(
            text.contains(&format!("vanishing determinant (n = {n}): pass")),
            "missing line for n = {n}"
        );
    }
}
