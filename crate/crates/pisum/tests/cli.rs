use std::process::{Command, Output};

use pisum::render::{to_json, TableJson};

fn pisum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pisum"))
        .args(args)
        .output()
        .expect("spawn pisum")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn zeta_table_rows() {
    let o = pisum(&["zeta", "--max-k", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("ζ(6) = (1/945)·π⁶ ≈ 1.017343"));
    assert!(out.contains("ζ(14) = (2/18243225)·π¹⁴"));
}

#[test]
fn beta_latex() {
    let o = pisum(&["--format", "latex", "beta", "--max-k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("\\begin{gather*}"));
    assert!(out.contains("\\pi^{3}/32"));
}

#[test]
fn json_round_trips_byte_identically() {
    for args in [["zeta", "--max-k", "12"], ["beta", "--max-k", "9"]] {
        let mut full = vec!["--format", "json"];
        full.extend(args);
        let o = pisum(&full);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        let parsed: TableJson = serde_json::from_str(&text).unwrap();
        assert_eq!(to_json(&parsed), text);
    }
}

#[test]
fn json_entries_are_strings() {
    let o = pisum(&["--format", "json", "--precision", "12", "zeta", "--max-k", "6"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kind"], "zeta_even");
    let e = &v["entries"][5];
    assert_eq!(e["k"], 6);
    assert_eq!(e["num"], "691");
    assert_eq!(e["den"], "638512875");
    assert_eq!(e["pi_power"], 12);
    assert_eq!(e["decimal"], "1.00024608655");
}

#[test]
fn coeffs_output() {
    let o = pisum(&["coeffs", "--family", "fk-cos", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2·(−1)^n·π^{−2}·n^{−2}"));
    let o = pisum(&["--format", "json", "coeffs", "--family", "gk-sin", "--k", "0"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["zeta", "--max-k", "0"],
        vec!["zeta", "--max-k", "65"],
        vec!["beta", "--max-k", "65"],
        vec!["verify", "--max-k", "33"],
        vec!["coeffs", "--family", "fk-cos", "--k", "0"],
        vec!["coeffs", "--family", "gk-cos", "--k", "0"],
        vec!["coeffs", "--family", "nope", "--k", "1"],
        vec!["--precision", "0", "zeta", "--max-k", "1"],
        vec!["--format", "xml", "zeta", "--max-k", "1"],
        vec!["frobnicate"],
    ] {
        assert_eq!(pisum(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn check_paper_has_no_mismatch() {
    let o = pisum(&["check-paper"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("48 claims: 39 exact, 9 numeric-only, 0 mismatch"));
    let o = pisum(&["--format", "json", "check-paper"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["claims"].as_array().unwrap().len() == 48);
}

#[test]
fn verify_passes() {
    let o = pisum(&["verify", "--max-k", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS 10/10 zeta, 10/10 beta, residuals exact"));
}
