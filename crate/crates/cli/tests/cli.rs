//! End-to-end tests of the `modquad` binary: output grammar, JSON
//! round-tripping, and the exit-code contract.

use std::process::{Command, Output};

use modquad_cli::report::VerdictReport;

fn modquad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modquad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn solve_methods_match_documented_sets() {
    let out = modquad(&["solve", "-a", "1", "-b", "2", "-c", "0", "-n", "8", "--method", "general"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0 2 4 6\n");

    let out = modquad(&["solve", "-a", "1", "-b", "0", "-c", "-1", "-n", "15", "--method", "exact"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 4 11 14\n");

    // empty set prints an empty line and still succeeds
    let out = modquad(&["solve", "-a", "3", "-b", "0", "-c", "1", "-n", "9", "--method", "iqf"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "\n");
}

#[test]
fn solve_accepts_long_flags() {
    let out = modquad(&[
        "solve", "--a", "1", "--b", "2", "--c", "0", "--n", "8", "--method", "brute",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0 2 4 6\n");
}

#[test]
fn general_brute_and_exact_agree() {
    for method in ["general", "brute", "exact"] {
        let out = modquad(&["solve", "-a", "1", "-b", "1", "-c", "0", "-n", "3", "--method", method]);
        assert_eq!(stdout(&out), "0 2\n", "method {method}");
    }
}

#[test]
fn sqrt_roots_count_and_empty() {
    let out = modquad(&["sqrt", "-u", "1", "-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 3 5 7\n");

    let out = modquad(&["sqrt", "-u", "9", "-n", "27", "--count"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "6\n");

    let out = modquad(&["sqrt", "-u", "6", "-n", "9"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "\n");

    let out = modquad(&["sqrt", "-u", "1", "-n", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_json_round_trips_byte_identical() {
    let out = modquad(&["classify", "-a", "9", "-b", "3", "-c", "1", "-n", "27", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let line = stdout(&out);
    let line = line.trim_end();
    let parsed: VerdictReport = serde_json::from_str(line).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap(), line);
    assert!(parsed.valid);
    assert_eq!(parsed.branch, "b.i");
    assert_eq!(parsed.witness.as_ref().map(|w| w.p), Some(3));
    assert_eq!(parsed.solutions_true, parsed.solutions_iqf);
}

#[test]
fn classify_reports_expected_branches() {
    let out = modquad(&["classify", "-a", "3", "-b", "6", "-c", "3", "-n", "27", "--json"]);
    let parsed: VerdictReport = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert!(parsed.valid);
    assert_eq!(parsed.branch, "b.ii");
    assert!(parsed.witness.is_none());

    // validity flag always mirrors set equality
    let out = modquad(&["classify", "-a", "1", "-b", "0", "-c", "1", "-n", "4", "--json"]);
    let parsed: VerdictReport = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert_eq!(parsed.valid, parsed.solutions_true == parsed.solutions_iqf);
}

#[test]
fn classify_human_output_names_the_branch() {
    let out = modquad(&["classify", "-a", "18", "-b", "18", "-c", "1", "-n", "27"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("branch: b.i"));
    assert!(text.contains("witness: p=3"));
}

#[test]
fn exit_codes_follow_the_contract() {
    // precondition failures: exit 2 with one stderr line
    let out = modquad(&["solve", "-a", "1", "-b", "0", "-c", "0", "-n", "4", "--method", "exact"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.starts_with("error:"));

    // modulus divides the leading coefficient: exit 3
    let out = modquad(&["classify", "-a", "27", "-b", "1", "-c", "1", "-n", "27"]);
    assert_eq!(out.status.code(), Some(3));

    // usage error: exit 2
    let out = modquad(&["solve", "-a", "1", "-n", "8"]);
    assert_eq!(out.status.code(), Some(2));

    // invalid instance: exit 2
    let out = modquad(&["solve", "-a", "0", "-b", "1", "-c", "1", "-n", "5", "--method", "brute"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_default_grid_is_clean() {
    let out = modquad(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for tag in ["a", "b.i", "b.ii", "b.iii", "b.iv", "invalid"] {
        assert!(text.contains(&format!("branch {tag}:")), "missing {tag}");
    }
    assert!(text.contains("discrepancies: 0"));
}

#[test]
fn verify_partitions_identically_across_workers() {
    let one = modquad(&["verify", "--n-min", "2", "--n-max", "24", "--workers", "1"]);
    let four = modquad(&["verify", "--n-min", "2", "--n-max", "24", "--workers", "4", "--fail-fast"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(four.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn verify_covers_every_branch_on_the_wide_grid() {
    let out = modquad(&[
        "verify", "--n-max", "64", "--coeff-min", "-8", "--coeff-max", "8", "--workers", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for tag in ["b.i", "b.ii", "b.iii", "b.iv"] {
        let line = text
            .lines()
            .find(|l| l.starts_with(&format!("branch {tag}:")))
            .unwrap_or_else(|| panic!("no line for {tag}"));
        let count: u64 = line.rsplit(' ').next().unwrap().parse().unwrap();
        assert!(count > 0, "branch {tag} never occurred");
    }
}

#[test]
fn verify_rejects_bad_grids() {
    let out = modquad(&["verify", "--n-min", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = modquad(&["verify", "--coeff-min", "0", "--coeff-max", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = modquad(&["verify", "--workers", "0"]);
    assert_eq!(out.status.code(), Some(2));
}
