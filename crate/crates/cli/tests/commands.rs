use std::fs;
use std::path::PathBuf;

use argstab_cli::{run, ExitStatus};

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("argstab-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn argv(parts: &[&str]) -> Vec<String> {
    std::iter::once("argstab").chain(parts.iter().copied()).map(String::from).collect()
}

#[test]
fn iaf_guard_exits_three() {
    let mut text = String::from("arg(t).\n");
    for i in 0..26 {
        text.push_str(&format!("?arg(u{i}).\n"));
    }
    let path = temp_file("wide.apx", &text);
    let out = run(argv(&[
        "iaf", "--file", path.to_str().unwrap(), "--arg", "t", "--semantics", "st", "--mode", "credulous",
        "--necessity", "possible",
    ]));
    assert_eq!(out.status, ExitStatus::Guard);
    assert_eq!(out.status.code(), 3);
    assert!(out.stdout.is_empty());
}

#[test]
fn stability_guard_exits_three() {
    let mut universe = String::from("arg(t).\n");
    for i in 0..26 {
        universe.push_str(&format!("arg(u{i}).\natt(u{i},t).\n"));
    }
    let universe = temp_file("universe.apx", &universe);
    let current = temp_file("current.apx", "arg(t).\n");
    let out = run(argv(&[
        "stability", "--universe", universe.to_str().unwrap(), "--current", current.to_str().unwrap(), "--arg",
        "t", "--semantics", "gr", "--mode", "skeptical",
    ]));
    assert_eq!(out.status, ExitStatus::Guard);
}

#[test]
fn empty_file_grounded_is_empty_extension() {
    let path = temp_file("empty.apx", "");
    let out = run(argv(&["solve", "--file", path.to_str().unwrap(), "--semantics", "gr", "--enumerate"]));
    assert_eq!((out.stdout.as_str(), out.status), ("[]\n", ExitStatus::Yes));
}

#[test]
fn no_stable_extension_enumerates_nothing_but_skeptical_is_yes() {
    let path = temp_file("cycle.apx", "arg(a).\narg(b).\narg(c).\natt(a,b).\natt(b,c).\natt(c,a).\n");
    let p = path.to_str().unwrap();
    let out = run(argv(&["solve", "--file", p, "--semantics", "st", "--enumerate"]));
    assert_eq!((out.stdout.as_str(), out.status), ("", ExitStatus::Yes));
    let out = run(argv(&["solve", "--file", p, "--semantics", "st", "--arg", "a", "--mode", "skeptical"]));
    assert_eq!((out.stdout.as_str(), out.status), ("YES\n", ExitStatus::Yes));
    let out = run(argv(&["solve", "--file", p, "--semantics", "st", "--arg", "a", "--mode", "credulous"]));
    assert_eq!((out.stdout.as_str(), out.status), ("NO\n", ExitStatus::No));
}

#[test]
fn solve_without_query_is_usage() {
    let out = run(argv(&["solve", "--file", &fixture("sample.apx"), "--semantics", "gr"]));
    assert_eq!(out.status, ExitStatus::Usage);
    let out = run(argv(&["solve", "--file", &fixture("sample.apx"), "--semantics", "gr", "--enumerate", "--arg", "a1", "--mode", "credulous"]));
    assert_eq!(out.status, ExitStatus::Usage);
}

#[test]
fn full_semantics_names_are_accepted() {
    let out = run(argv(&["solve", "--file", &fixture("sample.apx"), "--semantics", "stable", "--enumerate"]));
    assert_eq!(out.stdout, "[a1,a4,a6]\n");
}

#[test]
fn witness_flag_is_silent_on_stable_outcomes() {
    let out = run(argv(&[
        "stability", "--universe", &fixture("sample_universe.apx"), "--current", &fixture("sample_current.apx"),
        "--arg", "a6", "--semantics", "st", "--mode", "skeptical", "--witness",
    ]));
    assert_eq!(out.stdout, "STABLE-ACCEPTED\n");
}

#[test]
fn malformed_scenario_reports_line() {
    let path = temp_file("bad.scn", "[universe]\narg(p).\n[offers]\noffer x\n");
    let out = run(argv(&["negotiate", "--scenario", path.to_str().unwrap()]));
    assert_eq!(out.status, ExitStatus::Usage);
    assert!(out.stderr.contains("line 4"), "{}", out.stderr);
}

#[test]
fn crlf_input_is_accepted() {
    let path = temp_file("crlf.apx", "arg(a).\r\narg(b).\r\natt(a,b).\r\n");
    let out = run(argv(&["solve", "--file", path.to_str().unwrap(), "--semantics", "gr", "--enumerate"]));
    assert_eq!(out.stdout, "[a]\n");
}
