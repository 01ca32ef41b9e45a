// SPDX-License-Identifier: Apache-2.0

use std::process::Command;

use wbrst::catalog::{builtin_datum, render_spec};
use wbrst_cli::{run_cli, EXIT_INPUT, EXIT_OK};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("wbrst").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn verify_json_report() {
    let (code, out, _) = run(&["verify", "sl3-minimal", "--claim", "thm3.1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["datum"], "sl3-minimal");
    assert_eq!(v["claims"][0]["claim"], "thm3.1");
    assert_eq!(v["claims"][0]["status"], "verified");
    assert!(v["claims"][0]["residual"].is_null());
    assert!(v["claims"][0]["wall_time"].is_null());
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["verify", "sl2-principal", "--claim", "all", "--format", "json", "--seed", "11"];
    let (c1, a, _) = run(&args);
    let (c2, b, _) = run(&args);
    assert_eq!((c1, c2), (EXIT_OK, EXIT_OK));
    assert_eq!(a, b);
}

#[test]
fn check_and_text_output() {
    let (code, out, _) = run(&["check", "osp12-principal"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("d2") && out.contains("verified"), "{out}");
    let (code, out, _) = run(&["verify", "gl22-principal", "--claim", "thm3.2", "--timing"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains('s'), "{out}");
}

#[test]
fn central_charge() {
    let (code, out, _) = run(&["central-charge", "sl2-principal", "--k", "-1/2"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "0"));
    let (code, _, err) = run(&["central-charge", "sl2-principal", "--k", "-2"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("PoleAtPoint"), "{err}");
    let (code, out, _) = run(&["central-charge", "sl2-principal", "--k", "1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    // 1 - 6·4/3 = -7.
    assert_eq!(v["central_charge"], "-7");
    let (code, out, _) = run(&["central-charge", "gl22-principal"]);
    assert_eq!(code, EXIT_OK);
    assert!(!out.trim().is_empty());
}

#[test]
fn show_and_ffr() {
    let (code, out, _) = run(&["show", "sl2-principal", "--element", "J:h"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "h + 2:φ_e φ^e:"));
    let (code, out, _) = run(&["show", "sl2-principal", "--element", "d"]);
    assert_eq!((code, out.trim()), (EXIT_OK, ":e φ^e: + φ^e"));
    for (datum, el) in [("sl2-principal", "L"), ("sl3-minimal", "Jhat0:0"), ("sl21-minimal", "Jhalf:0"), ("sl3-minimal", "L")] {
        let (code, out, err) = run(&["ffr", datum, "--element", el]);
        assert_eq!(code, EXIT_OK, "{datum} {el}: {err}");
        assert!(!out.contains('φ'), "{out}");
    }
    let (code, out, _) = run(&["ffr", "sl2-principal", "--element", "L", "--format", "latex"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("\\documentclass") && out.contains("\\partial"), "{out}");
}

#[test]
fn input_errors() {
    for args in [
        vec!["check", "e8-principal"],
        vec!["verify", "sl2-principal", "--claim", "thm9"],
        vec!["show", "sl2-principal", "--element", "nonsense"],
        vec!["ffr", "sl2-principal", "--element", "d"],
        vec!["ffr", "sl2-principal", "--element", "Jhat0:0"],
        vec!["central-charge", "sl2-principal", "--k", "one"],
        vec!["frobnicate"],
    ] {
        let (code, _, err) = run(&args);
        assert_eq!(code, EXIT_INPUT, "{args:?}");
        assert!(!err.is_empty());
    }
    let (code, _, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn datum_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sl3.json");
    std::fs::write(&path, render_spec(&builtin_datum("sl3-minimal").unwrap().alg)).unwrap();
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&["verify", p, "--claim", "thm3.1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("\"verified\""));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"name\": 3\n}\n").unwrap();
    let (code, _, err) = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn binary_exit_codes_and_workers() {
    let bin = env!("CARGO_BIN_EXE_wbrst");
    let st = Command::new(bin).args(["check", "sl2-principal"]).env("WBRST_WORKERS", "2").output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_OK));
    let st = Command::new(bin).args(["check", "sl2-principal"]).env("WBRST_WORKERS", "zero").output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_INPUT));
    let st = Command::new(bin).args(["central-charge", "sl2-principal", "--k", "-2"]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_INPUT));
}
