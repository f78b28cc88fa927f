use std::process::{Command, Output};

use serde_json::Value;

fn sandpile(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sandpile")).args(args).env_remove("SANDPILE_ENUM_CAP").output().unwrap()
}

fn json_of(args: &[&str]) -> Value {
    let out = sandpile(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn count_symmetric_examples() {
    assert_eq!(json_of(&["count-symmetric", "--rows", "4", "--cols", "4"])["value"], 36);
    assert_eq!(json_of(&["count-symmetric", "--rows", "4", "--cols", "3"])["value"], 71);
    assert_eq!(json_of(&["count-symmetric", "--rows", "1", "--cols", "1"])["value"], 4);
    for method in ["enumerate", "product", "chebyshev", "tilings"] {
        let v = json_of(&["count-symmetric", "--rows", "3", "--cols", "4", "--method", method]);
        assert_eq!(v["value"], 71, "{method}");
        assert_eq!(v["method"], method);
    }
    let all = json_of(&["count-symmetric", "--rows", "5", "--cols", "5", "--method", "all"]);
    assert_eq!(all["report"]["agree"], true);
    assert_eq!(all["report"]["values"]["tilings"], all["report"]["values"]["det"]);
}

#[test]
fn count_tilings_examples() {
    let v = json_of(&["count-tilings", "--rows", "4", "--cols", "4"]);
    assert_eq!((v["board"].as_str(), v["count"].as_u64()), (Some("plain"), Some(36)));
    assert_eq!(json_of(&["count-tilings", "--rows", "4", "--cols", "4", "--board", "mobius"])["count"], 71);
    let v = json_of(&["count-tilings", "--rows", "6", "--cols", "8", "--enumerate"]);
    assert_eq!(v["count"], v["census"]["weight_sum"]);
    assert_eq!(v["census"]["count"], v["count"]);
    let v = json_of(&["count-tilings", "--rows", "5", "--cols", "2", "--board", "mobius-weighted", "--enumerate"]);
    assert_eq!(v["count"], 41);
    assert_eq!(v["census"]["matchings"].as_array().unwrap().len(), 8);
}

#[test]
fn order_examples() {
    assert_eq!(json_of(&["order", "--rows", "2", "--cols", "3", "--config", "all-twos"])["order"], 7);
    let v = json_of(&["order", "--rows", "2", "--cols", "2", "--config", "all-ones"]);
    assert_eq!((v["order"].as_u64(), v["ratio_to_all_twos"].as_u64()), (Some(2), Some(2)));
    assert_eq!(json_of(&["order", "--rows", "2", "--cols", "3", "--config", "all-ones"])["order"], 7);
    assert_eq!(json_of(&["order", "--rows", "1", "--cols", "1"])["order"], 2);
}

#[test]
fn identity_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let pgm = dir.path().join("e.pgm");
    let p = pgm.to_str().unwrap();
    json_of(&["identity", "--rows", "2", "--cols", "2", "--out", p]);
    assert_eq!(std::fs::read_to_string(&pgm).unwrap(), "P2\n2 2\n3\n2 2\n2 2\n");
    let js = dir.path().join("e.json");
    json_of(&["identity", "--rows", "3", "--cols", "2", "--out", js.to_str().unwrap(), "--format", "json"]);
    let rows: Vec<Vec<u64>> = serde_json::from_str(&std::fs::read_to_string(&js).unwrap()).unwrap();
    assert_eq!((rows.len(), rows[0].len()), (3, 2));
}

#[test]
fn verify_small() {
    let v = json_of(&["verify", "--max-m", "2", "--max-n", "2"]);
    assert_eq!(v["agree"], true);
    let rows = v["rows"].as_array().unwrap();
    let find = |parity: &str, m: u64, n: u64| {
        rows.iter().find(|r| r["parity"] == parity && r["m"] == m && r["n"] == n).unwrap()["values"].clone()
    };
    assert_eq!(find("even_even", 2, 2)["det"], 36);
    assert_eq!(find("even_odd", 2, 2)["lu_wu"], 71);
    assert_eq!(find("p_n", 2, 2)["a_n"], 3);
    assert_eq!(rows.len(), 3 * 4 + 2);
}

#[test]
fn a_seq_output() {
    let v = json_of(&["a-seq", "--n", "6"]);
    assert_eq!(v["values"], serde_json::json!([1, 3, 29, 901, 89893, 28793575]));
    assert_eq!(v["all_odd"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(sandpile(&["order", "--rows", "x", "--cols", "2"]).status.code(), Some(2));
    assert_eq!(sandpile(&["count-tilings", "--rows", "3", "--cols", "3", "--board", "two-weighted"]).status.code(), Some(2));
    assert_eq!(sandpile(&["count-symmetric", "--rows", "0", "--cols", "2"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_sandpile"))
        .args(["count-tilings", "--rows", "4", "--cols", "4", "--enumerate"])
        .env("SANDPILE_ENUM_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
    let out = Command::new(env!("CARGO_BIN_EXE_sandpile"))
        .args(["count-symmetric", "--rows", "4", "--cols", "4", "--method", "enumerate"])
        .env("SANDPILE_ENUM_CAP", "oops")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(sandpile(&["count-tilings", "--rows", "40", "--cols", "40"]).status.code(), Some(3));
}
