//! Process-level tests of the command-line binary: output shapes, exit
//! codes, and determinism across runs.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pvtrees"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_of(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_prints_exact_values() {
    assert_eq!(stdout_of(&run(&["count", "--family", "forest", "--n", "3"])).trim(), "16");
    assert_eq!(stdout_of(&run(&["count", "--family", "plane_forest", "--n", "5"])).trim(), "5040");
    assert_eq!(stdout_of(&run(&["count", "--family", "kary", "--n", "4", "--k", "3"])).trim(), "1320");
    assert_eq!(
        stdout_of(&run(&["count", "--family", "tree", "--n", "20"])).trim(),
        "5242880000000000000000000" // 20^19
    );
}

#[test]
fn poly_methods_agree() {
    let closed = stdout_of(&run(&["poly", "--family", "forest", "--n", "5"]));
    let brute = stdout_of(&run(&["poly", "--family", "forest", "--n", "5", "--method", "brute"]));
    let c: serde_json::Value = serde_json::from_str(&closed).unwrap();
    let b: serde_json::Value = serde_json::from_str(&brute).unwrap();
    assert_eq!(c["coeffs"], b["coeffs"]);
    assert_eq!(c["method"], "closed");
    assert_eq!(b["method"], "brute");

    let rec = stdout_of(&run(&["poly", "--family", "binary", "--n", "4", "--method", "recurrence"]));
    let r: serde_json::Value = serde_json::from_str(&rec).unwrap();
    let c4 = stdout_of(&run(&["poly", "--family", "binary", "--n", "4"]));
    let c4: serde_json::Value = serde_json::from_str(&c4).unwrap();
    assert_eq!(r["coeffs"], c4["coeffs"]);
}

#[test]
fn verify_reports_pass_lines_and_json() {
    let out = run(&["verify", "--check", "postnikov", "--n", "3"]);
    let text = stdout_of(&out);
    assert!(text.contains("16 = 16"), "got: {text}");
    assert!(text.lines().all(|l| l.ends_with(": pass")));

    let json = stdout_of(&run(&["verify", "--check", "special", "--n", "3", "--json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["pass"], true);
    assert!(v["results"].as_array().unwrap().len() >= 6);

    let parallel = stdout_of(&run(&["verify", "--check", "postnikov", "--n", "6", "--parallel"]));
    let serial = stdout_of(&run(&["verify", "--check", "postnikov", "--n", "6"]));
    assert_eq!(parallel, serial);
}

#[test]
fn verify_series_checks() {
    assert!(run(&["verify", "--check", "ode", "--order", "6"]).status.success());
    assert!(run(&["verify", "--check", "functional", "--family", "forest", "--t0", "2"]).status.success());
    // t0 = 1 makes the forest exponent vanish: domain rejection, exit 1
    let degenerate = run(&["verify", "--check", "functional", "--family", "forest", "--t0", "1"]);
    assert_eq!(degenerate.status.code(), Some(1));
}

#[test]
fn enum_is_deterministic_and_complete() {
    let a = stdout_of(&run(&["enum", "--family", "plane_forest", "--n", "3"]));
    let b = stdout_of(&run(&["enum", "--family", "plane_forest", "--n", "3"]));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 30); // 3! C_3

    let seq = stdout_of(&run(&["enum", "--family", "binary", "--n", "4"]));
    let par = stdout_of(&run(&["enum", "--family", "binary", "--n", "4", "--parallel"]));
    assert_eq!(seq, par);

    let dn = stdout_of(&run(&["enum", "--family", "binary", "--n", "3", "--constraint", "dn"]));
    assert_eq!(dn.lines().count(), 128); // 2^3 * 4^2

    // empty structure is skipped unless requested
    assert_eq!(stdout_of(&run(&["enum", "--family", "binary", "--n", "0"])), "");
    let with_empty = stdout_of(&run(&["enum", "--family", "binary", "--n", "0", "--include-empty"]));
    assert_eq!(with_empty.lines().count(), 1);
}

#[test]
fn map_composes_to_identity() {
    let input = r#"{"family":"binary","n":3,"parent":[0,1,1],"slot":[0,1,2],"color":["b","w","b"]}"#;
    let forward = run_with_stdin(&["map", "--name", "full"], input);
    let image = stdout_of(&forward);
    let back = run_with_stdin(&["map", "--name", "full", "--direction", "inverse"], image.trim());
    let restored = stdout_of(&back);
    let orig: serde_json::Value = serde_json::from_str(input).unwrap();
    let got: serde_json::Value = serde_json::from_str(&restored).unwrap();
    assert_eq!(orig, got);

    let img: serde_json::Value = serde_json::from_str(&image).unwrap();
    assert_eq!(img["family"], "forest");
}

#[test]
fn map_flip_needs_vertex_and_is_involutive() {
    let input = r#"{"family":"binary","n":2,"parent":[2,0],"slot":[1,0],"color":["b","b"]}"#;
    let missing = run_with_stdin(&["map", "--name", "flip"], input);
    assert_eq!(missing.status.code(), Some(2));

    let once = stdout_of(&run_with_stdin(&["map", "--name", "flip", "--vertex", "2"], input));
    let twice = stdout_of(&run_with_stdin(&["map", "--name", "flip", "--vertex", "2"], once.trim()));
    assert_eq!(
        serde_json::from_str::<serde_json::Value>(input).unwrap(),
        serde_json::from_str::<serde_json::Value>(&twice).unwrap()
    );

    let bad_vertex = run_with_stdin(&["map", "--name", "flip", "--vertex", "9"], input);
    assert_eq!(bad_vertex.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    // 2: usage and format errors
    assert_eq!(run(&["count", "--family", "klein_bottle", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--family", "kary", "--n", "2"]).status.code(), Some(2)); // missing --k
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run_with_stdin(&["map", "--name", "gamma"], "not json").status.code(), Some(2));
    assert_eq!(
        run_with_stdin(
            &["map", "--name", "gamma"],
            r#"{"family":"forest","n":2,"parent":[2,1]}"#, // cycle
        )
        .status
        .code(),
        Some(2)
    );

    // 1: domain violations
    // gamma forward needs the root to carry the top label
    let wrong_root = r#"{"family":"tree","n":2,"parent":[0,1]}"#;
    assert_eq!(run_with_stdin(&["map", "--name", "gamma"], wrong_root).status.code(), Some(1));

    // 0: help
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn ceiling_guardrail() {
    let out = run(&["enum", "--family", "forest", "--n", "4", "--ceiling", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("ceiling"), "got: {msg}");
}
