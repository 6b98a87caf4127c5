//! End-to-end checks of the binary: exit codes, byte determinism and the
//! JSON schema of the subcommand output.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lorhom"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn marks_f4_plain() {
    let out = run(&["marks", "F4"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "2 3 4 2\n");
}

#[test]
fn verify_all_is_byte_deterministic_and_clean() {
    let a = run(&["verify", "--all"]);
    let b = run(&["verify", "--all"]);
    assert_eq!(a.status.code(), Some(0), "verification must be clean");
    assert_eq!(a.stdout, b.stdout, "output must be byte-identical");
    let text = String::from_utf8_lossy(&a.stdout);
    assert!(text.contains("known: E_8: SU_8"));
    assert_eq!(text.matches("status: clean").count(), 4);
}

#[test]
fn verify_single_table() {
    let out = run(&["verify", "table1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("matched: 9"));
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(run(&["marks", "SO4"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-subcommand"]).status.code(), Some(2));
    assert_eq!(run(&["marks", "F4", "--format", "yaml"]).status.code(), Some(2));
}

#[test]
fn class2_json_round_trips() {
    let out = run(&["enumerate-class2", "--max-dim", "11", "--format", "json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = parsed.as_array().unwrap();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[0]["g_name"], "SL(2,R)");
    assert_eq!(rows[0]["dim_d"], 3);
    // Re-serialize and re-run: byte-identical.
    let again = run(&["enumerate-class2", "--max-dim", "11", "--format", "json"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn dual_lookup() {
    let out = run(&["dual", "SU(1,2)"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("SU(3)/U(1)"));
}

#[test]
fn case_subcommand_reports_signature() {
    let out = run(&["case", "real", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("dim m^H: 1"));
    assert!(text.contains("metric signature on m: (1, 0, 4)"));
}
