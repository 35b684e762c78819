use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhverma"))
        .args(args)
        .env_remove("QHVERMA_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    let out = run(&a);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    v["result"].clone()
}

fn phi(report: &Value, map: &str) -> String {
    report["maps"]
        .as_array()
        .unwrap()
        .iter()
        .find(|m| m["map"] == map)
        .map(|m| m["phi"].as_str().unwrap().to_string())
        .unwrap()
}

#[test]
fn scan_small_ranks() {
    assert!(json(&["scan", "--max-rank", "2"])["cases"]
        .as_array()
        .unwrap()
        .is_empty());
    let r = json(&["scan", "--max-rank", "3"]);
    let cs: Vec<&str> = r["cases"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(
        cs.iter().filter(|c| c.starts_with('C')).collect::<Vec<_>>(),
        vec![&"C3(2)"]
    );
    let r = json(&["scan"]);
    let cs = r["cases"].as_array().unwrap();
    let exceptional = cs
        .iter()
        .filter(|c| matches!(&c.as_str().unwrap()[..1], "E" | "F"))
        .count();
    assert_eq!(exceptional, 6);
}

#[test]
fn classify_verdicts() {
    let r = json(&["classify", "B", "6", "4"]);
    assert_eq!(phi(&r, "gamma"), "standard");
    assert_eq!(phi(&r, "ngamma"), "non-standard");
    assert_eq!(phi(&r, "omega1"), "standard");
    let r = json(&["classify", "F", "4", "4"]);
    assert_eq!(phi(&r, "gamma"), "standard");
    assert_eq!(phi(&r, "ngamma"), "-");
    let r = json(&["classify", "E", "8", "1"]);
    assert_eq!(phi(&r, "gamma"), "non-standard");
    let g = r["maps"]
        .as_array()
        .unwrap()
        .iter()
        .find(|m| m["map"] == "gamma")
        .unwrap();
    assert_eq!(g["witness"]["steps"].as_array().unwrap().len(), 2);
    assert_eq!(g["special_value"], "3");
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_qhverma"))
        .args(["classify", "E", "8", "1", "--json"])
        .env("QHVERMA_BUDGET", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["budget"], 1);
    assert_eq!(phi(&v["result"], "gamma"), "unknown");
}

#[test]
fn non_qh_is_a_usage_error() {
    for args in [
        &["classify", "A", "4", "2"][..],
        &["verify-hwv", "A", "4", "2"],
        &["classify", "B", "5", "2"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("quasi-Heisenberg"));
    }
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["tables", "T9"]).status.code(), Some(2));
}

#[test]
fn verify_hwv() {
    let r = json(&["verify-hwv", "B", "5", "3"]);
    assert_eq!(r["ok"], true);
    let dim = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["name"].as_str().unwrap().contains("dimension 1"));
    assert!(dim);
    let r = json(&["verify-hwv", "B", "4", "4"]);
    assert_eq!(r["ok"], true);
    assert!(r["convention"].as_str().unwrap().contains("extraspecial"));
}

#[test]
fn tables_match_and_keep_rationals_exact() {
    let r = json(&["tables", "T4", "--ranks", "B5..B8"]);
    assert_eq!(r["mismatches"], 0);
    let cells = r["cells"].as_array().unwrap();
    assert!(cells.iter().any(|c| c["computed"] == "?"));
    assert!(cells
        .iter()
        .any(|c| c["case"] == "B7(3)" && c["computed"] == "7/2"));
    assert!(cells
        .iter()
        .all(|c| !c["computed"].as_str().unwrap().contains('.')));
    let out = run(&["tables", "T5"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("all 72 cells match"));
}

#[test]
fn typo_in_reference_fails_naming_the_cell() {
    let golden = include_str!("../data/golden.txt").replace(
        "B  | i = n-1       | T3 | ngamma | 1b",
        "B  | i = n-1       | T3 | ngamma | 1a",
    );
    let dir = std::env::temp_dir().join(format!("qhverma-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("golden.txt");
    std::fs::write(&path, golden).unwrap();
    let out = run(&[
        "tables",
        "T3",
        "--ranks",
        "B5..B6",
        "--golden",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(
        text.contains("B5(4) ngamma: computed 1b, expected 1a"),
        "{text}"
    );
    assert!(text.contains("B6(5) ngamma"), "{text}");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn link_command() {
    // E6(3): (α1, α3) links -α4 - λ3 + ρ to -2α3 - α1 - α4 - λ3 + ρ
    let r = json(&[
        "link",
        "--system",
        "E6",
        "--from",
        "rho-w3-a4",
        "--to",
        "rho-w3-a1-2*a3-a4",
    ]);
    assert_eq!(r["outcome"], "found");
    let roots: Vec<&str> = r["steps"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["root"].as_str().unwrap())
        .collect();
    assert_eq!(roots, vec!["a1", "a3"]);
    let r = json(&["link", "--system", "B3", "--from", "1,1,1", "--to", "1,1,1"]);
    assert_eq!(r["outcome"], "found");
    assert!(r["steps"].as_array().unwrap().is_empty());
    assert_eq!(
        run(&["link", "--system", "B3", "--from", "1,1", "--to", "1,1,1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn json_is_stable() {
    let a = run(&["classify", "D", "7", "4", "--json"]);
    let b = run(&["classify", "D", "7", "4", "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
