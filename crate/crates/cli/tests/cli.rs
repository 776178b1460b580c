//! End-to-end runs of the binary: every subcommand against a small
//! workspace, the documented error paths, and the two output formats.

use std::path::PathBuf;
use std::process::Command;

fn write_workspace(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("yext-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_yext"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).to_string(),
        String::from_utf8_lossy(&output.stderr).to_string(),
    )
}

const GENERATOR: &str = "\
ring 4
module M [2]
module R []
morphism f M R [2]
morphism g R M [1]
morphism id_m M M [1]
morphism fold M M [3]
ses E f g
next X E E
";

#[test]
fn class_and_group_commands() {
    let ws = write_workspace("gen.ws", GENERATOR);
    let file = ws.to_str().unwrap();

    let (code, out, _) = run(&["extgroup", "M", "M", "2", "--file", file]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "Z/2");

    let (code, out, _) = run(&["class", "X", "--file", file]);
    assert_eq!(code, 0);
    assert_ne!(out.trim(), "0", "the composed generator is nonzero in Ext^2");

    let (code, out, _) = run(&["sum", "X", "X", "--file", file]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "0");

    let (code, out, _) = run(&["compose", "E", "E", "--file", file]);
    assert_eq!(code, 0);
    assert!(out.contains("degree 2"), "{out}");

    let (code, out, _) = run(&["act-left", "fold", "E", "--file", file]);
    assert_eq!(code, 0);
    // Multiplication by three is an automorphism of M, so the class survives.
    assert_ne!(out.trim(), "0");

    let (code, out, _) = run(&["act-right", "E", "id_m", "--file", file]);
    assert_eq!(code, 0);
    assert_ne!(out.trim(), "0");
}

#[test]
fn family_commands() {
    let ws = write_workspace("fam.ws", GENERATOR);
    let file = ws.to_str().unwrap();

    let (code, out, _) = run(&["theta", "E", "E", "--file", file]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("recovered: PASS"), "{out}");

    let (code, out, _) = run(&["psi-inv", "2", "X", "X", "--file", file]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("component X recovered: PASS"), "{out}");

    let (code, out, _) = run(&["ab4-check", "f", "f", "--file", file]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("monomorphism: PASS"), "{out}");
}

#[test]
fn psi_needs_the_matching_biproduct() {
    let ws = write_workspace("psi.ws", GENERATOR);
    let file = ws.to_str().unwrap();
    // E ends at M, not at M ⊕ M.
    let (code, _, err) = run(&["psi", "E", "M", "M", "--file", file]);
    assert_eq!(code, 2);
    assert!(err.contains("biproduct"), "{err}");
}

#[test]
fn unknown_names_and_parse_errors_exit_two() {
    let ws = write_workspace("err.ws", GENERATOR);
    let file = ws.to_str().unwrap();

    let (code, _, err) = run(&["class", "nope", "--file", file]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown"), "{err}");

    let bad = write_workspace("bad.ws", "ring 4\nmodule M [2]\nmorphism f M M [oops]\n");
    let (code, _, err) = run(&["class", "E", "--file", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");

    let (code, _, err) = run(&["laws", "--suite", "unheard-of"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown suite"), "{err}");
}

#[test]
fn tsv_format_is_tab_separated() {
    let (code, out, _) = run(&[
        "laws",
        "--suite",
        "cardinality",
        "--cases",
        "3",
        "--seed",
        "1",
        "--format",
        "tsv",
    ]);
    assert_eq!(code, 0);
    let first = out.lines().next().unwrap();
    assert_eq!(first.split('\t').count(), 4, "{first}");
    assert!(out.trim_end().ends_with("TOTAL 3/3"));
}

#[test]
fn laws_over_z_run_clean() {
    let (code, out, _) = run(&[
        "laws",
        "--suite",
        "baer-group",
        "--cases",
        "5",
        "--seed",
        "3",
        "--ring",
        "0",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.trim_end().ends_with("TOTAL 5/5"), "{out}");
}
