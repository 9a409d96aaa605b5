use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn qsymp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsymp"))
        .args(args)
        .env_remove("QSYMP_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad json ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

const SHOR: &str = "\
# Shor stabilizer
ZZIIIIIII
IZZIIIIII
IIIZZIIII
IIIIZZIII
IIIIIIZZI
IIIIIIIZZ
XXXXXXIII
IIIXXXXXX
";

#[test]
fn analyze_repetition() {
    let out = qsymp(&["analyze", "--fixture", "repetition"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let p = &v["params"];
    assert_eq!(
        (p["n"].as_u64(), p["k_sym"].as_u64(), p["s"].as_u64(), p["d"].as_u64(), p["maxwt"].as_u64()),
        (Some(2), Some(1), Some(2), Some(1), Some(2))
    );
    assert_eq!(v["enumerators"]["B_poly"], serde_json::json!([1, 2, 5]));
    assert_eq!(v["failures"], 0);
}

#[test]
fn import_shor_as_stabilizer() {
    let f = temp_file(SHOR);
    let out = qsymp(&["import", "--pauli", f.path().to_str().unwrap(), "--as", "stabilizer"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["params"]["n"], 9);
    assert_eq!(v["params"]["k_sym"], 1);
    assert_eq!(v["params"]["d"], 3);
    assert_eq!(v["identity"]["role"], "stabilizer");
}

#[test]
fn empty_stabilizer_gives_whole_space() {
    let f = temp_file("# nothing\n");
    let out = qsymp(&["import", "--pauli", f.path().to_str().unwrap(), "--as", "stabilizer", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["params"]["k_sym"], 3);
    assert_eq!(v["code"]["basis"].as_array().unwrap().len(), 6);
    let out = qsymp(&["import", "--pauli", f.path().to_str().unwrap(), "--as", "stabilizer"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn gauge_import_reports_logical_count() {
    let f = temp_file("XXII\nIIXX\nZIZI\nIZIZ\n");
    let out = qsymp(&["import", "--pauli", f.path().to_str().unwrap(), "--as", "gauge"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["params"]["logical_count"], 1);
    let out = qsymp(&["analyze", "--fixture", "bacon-shor"]);
    assert_eq!(json(&out)["params"]["logical_count"], 1);
}

#[test]
fn parse_error_names_line() {
    let f = temp_file("ZZ\nZQ\n");
    let out = qsymp(&["import", "--pauli", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert_eq!(v["error"], "input");
    assert!(v["message"].as_str().unwrap().contains("line 2"), "{v}");
}

#[test]
fn non_commuting_stabilizer_names_pair() {
    let f = temp_file("ZZ\nXI\n");
    let out = qsymp(&["import", "--pauli", f.path().to_str().unwrap(), "--as", "stabilizer"]);
    assert_eq!(out.status.code(), Some(3));
    let msg = json(&out)["message"].as_str().unwrap().to_string();
    assert!(msg.contains("1") && msg.contains("2"), "{msg}");
    // the same generators are a fine plain code
    let out = qsymp(&["import", "--pauli", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn budget_exit_code() {
    let out = qsymp(&["analyze", "--fixture", "shor", "--budget", "100"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["error"], "budget");
    assert_eq!(v["budget"], 100);

    let out = Command::new(env!("CARGO_BIN_EXE_qsymp"))
        .args(["analyze", "--fixture", "shor"])
        .env("QSYMP_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_fixture_and_bad_flags() {
    assert_eq!(qsymp(&["analyze", "--fixture", "nope"]).status.code(), Some(3));
    assert_eq!(qsymp(&["analyze", "--fixture", "shor", "--q", "3"]).status.code(), Some(3));
    assert_eq!(qsymp(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(qsymp(&["puncture", "--fixture", "shor", "--support", "0,1"]).status.code(), Some(3));
}

#[test]
fn puncture_shor_s_prime() {
    let out = qsymp(&["puncture", "--fixture", "shor", "--support", "1,2,3,4", "--of", "s-prime"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["decomposition"]["s_prime"].as_array().unwrap().len(), 3);
    assert_eq!(v["puncture_A"]["dim"], 1);
    assert_eq!(v["puncture_A_complement"]["dim"], 1);
    assert_eq!(v["puncture_A"]["radical"], serde_json::json!(["(e, e, e, 0)"]));
    assert_eq!(v["puncture_A_complement"]["radical"], serde_json::json!(["(0, 0, e, e, e)"]));
    assert_eq!(v["support"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn enumerator_json_keys() {
    let v = json(&qsymp(&["enumerator", "--fixture", "repetition"]));
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys, ["A_poly", "B", "B_poly", "W"]);
    let out = qsymp(&["enumerator", "--fixture", "repetition", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("B(x,y) = y^2 + 2xy + 5x^2"), "{text}");
}

#[test]
fn moments_with_macwilliams() {
    let out = qsymp(&["moments", "--fixture", "shor", "--check-macwilliams"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["macwilliams"]["failures"], 0);
    assert_eq!(v["B"][9], 1024);
}

#[test]
fn export_round_trips() {
    for (to, flag) in [("json", "--json"), ("matrix", "--matrix"), ("pauli", "--pauli")] {
        let out = qsymp(&["export", "--fixture", "shor", "--to", to]);
        assert_eq!(out.status.code(), Some(0), "{to}");
        let f = temp_file(&String::from_utf8(out.stdout).unwrap());
        let back = json(&qsymp(&["import", flag, f.path().to_str().unwrap()]));
        let orig = json(&qsymp(&["import", "--fixture", "shor"]));
        assert_eq!(back["code"], orig["code"], "{to}");
    }
}

#[test]
fn verify_fixtures_suite_passes() {
    let out = qsymp(&["verify", "--suite", "fixtures"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["total_failures"], 0);
    let out = qsymp(&["verify", "--suite", "oracle", "--fixture", "bacon-shor", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("suite,family,pass,fail\n"));
    assert!(text.contains("input fixture:bacon-shor"));
    assert_eq!(qsymp(&["verify", "--suite", "bogus"]).status.code(), Some(3));
}

#[test]
fn invariants_formats() {
    let v = json(&qsymp(&["invariants", "--fixture", "bacon-shor"]));
    assert_eq!(v["invariants"]["theta"], serde_json::json!([0, 0, 0, 2, 2]));
    let csv = String::from_utf8(qsymp(&["invariants", "--fixture", "bacon-shor", "--format", "csv"]).stdout).unwrap();
    assert!(csv.starts_with("b,theta,phi\n0,0,0\n"));
}
