//! CLI output compared byte-for-byte against checked-in golden files.

use std::path::Path;
use std::process::{Command, Output};

const CASES: &[(&str, &[&str])] = &[
    ("zhat_unknot", &["zhat", "--braid", "1", "--order", "8"]),
    ("zhat_trefoil", &["zhat", "--braid", "1 1 1", "--order", "10"]),
    ("zhat_figure_eight", &["zhat", "--braid", "1 -2 1 -2", "--order", "4"]),
    ("zhat_trefoil_stabilized", &["zhat", "--braid", "1 1 1 2", "--order", "8"]),
    ("zhat_knot_6_2", &["zhat", "--braid", "1 1 1 -2 1 -2", "--order", "6"]),
    ("zhat_knot_6_3", &["zhat", "--braid", "1 1 -2 1 -2 -2", "--order", "6"]),
    ("alexander_knot_7_7", &["alexander", "--braid", "1 -2 1 -2 3 -2 3", "--order", "8"]),
    ("orbits_figure_eight", &["orbits", "--braid", "1 -2 1 -2", "--max-degree", "4"]),
];

fn run(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_flowloop"));
    cmd.args(args);
    if let Some(t) = threads {
        cmd.env("FLOWLOOP_THREADS", t);
    }
    cmd.output().expect("binary runs")
}

#[test]
fn outputs_match_golden_files() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (name, args) in CASES {
        let want = std::fs::read_to_string(dir.join(format!("{name}.txt"))).unwrap();
        let out = run(args, None);
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(String::from_utf8(out.stdout).unwrap(), want, "{name}");
    }
}

#[test]
fn output_does_not_depend_on_thread_count() {
    for args in [&["zhat", "--braid", "1 1 -2 1 -2 -2", "--order", "6"][..], &["trace", "--braid", "1 -2 1 -2", "--mmax", "3"]] {
        let one = run(args, Some("1"));
        let four = run(args, Some("4"));
        assert!(one.status.success());
        assert_eq!(one.stdout, four.stdout);
    }
}

#[test]
fn json_output_parses_and_agrees_with_text_mode() {
    let out = run(&["zhat", "--braid", "1 1 1", "--order", "6", "--format", "json"], None);
    assert!(out.status.success());
    let js: flowloop::zhat::ZhatJson = serde_json::from_slice(&out.stdout).unwrap();
    let phi = flowloop::zhat::series_from_json(&js.phi, 12).unwrap();
    let text = String::from_utf8(run(&["phi", "--braid", "1 1 1", "--order", "6"], None).stdout).unwrap();
    assert_eq!(text.trim(), format!("phi: {phi}"));
}

#[test]
fn errors_use_documented_exit_codes() {
    let bad_braid = run(&["zhat", "--braid", "1 x 2"], None);
    assert_eq!(bad_braid.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad_braid.stderr).contains("x"));
    let link = run(&["zhat", "--braid", "1 1"], None);
    assert_eq!(link.status.code(), Some(1));
    let non_homogeneous = run(&["zhat", "--braid", "1 -1 1"], None);
    assert_eq!(non_homogeneous.status.code(), Some(1));
    assert_eq!(run(&["--help"], None).status.code(), Some(0));
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(1));
}

#[test]
fn verify_reports_all_suites_passing() {
    let out = run(&["verify", "--suite", "all"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success(), "{text}");
    assert!(text.trim_end().ends_with(", 0 failed"), "{text}");
}
