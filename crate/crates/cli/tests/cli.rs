use std::path::PathBuf;
use std::process::Command;

use polind_cli::{run, EXIT_CAP_EXCEEDED, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_PASS};
use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["polind".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    argv.extend(["--format".to_string(), "json".to_string()]);
    let out = run(argv);
    (out.code, serde_json::from_str(&out.stdout).expect("json report"))
}

fn check<'a>(doc: &'a Value, name: &str) -> &'a Value {
    doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check {name}"))
}

#[test]
fn binary_nullcone_example() {
    let (code, doc) = json(&["nullcone", "binary", &data("x3y.json")]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(doc["data"]["member"], true);
    assert_eq!(doc["data"]["witness"], "x1");
    let (_, doc) = json(&["nullcone", "binary", &data("x2y2.json")]);
    assert_eq!(doc["data"]["member"], false);
    assert_eq!(doc["data"]["witness"], Value::Null);
}

#[test]
fn torus_nullcone_examples() {
    let (code, doc) = json(&["nullcone", "torus", &data("torus.json"), "1,1,0"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(doc["data"]["gamma"], serde_json::json!([1]));
    assert_eq!(doc["data"]["v_gamma"], serde_json::json!([0, 1]));
    let (code, doc) = json(&["nullcone", "torus", &data("torus.json"), "-1,0,1"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(doc["data"]["member"], false);
    assert_eq!(check(&doc, "box_search_agrees")["status"], "PASS");
    let (code, _) = json(&["nullcone", "torus", &data("torus.json"), "1,0"]);
    assert_eq!(code, EXIT_INPUT_ERROR);
}

#[test]
fn compare_s2_is_all_equal() {
    let (code, doc) = json(&["compare", &data("s2.json"), "--copies", "2", "--max-degree", "4"]);
    assert_eq!(code, EXIT_PASS);
    let rows = doc["data"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 15);
    assert!(rows.iter().all(|r| r["dim_invariants"] == r["dim_pol_span"]));
}

#[test]
fn compare_d4_reports_the_gap() {
    let (code, doc) = json(&["compare", &data("d4.json"), "--copies", "2", "--max-degree", "6"]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert_eq!(check(&doc, "all_rows_equal")["detail"], "gaps at (3,3) (10 vs 9)");
}

#[test]
fn custom_group_with_listed_invariants() {
    let (code, doc) = json(&["compare", &data("dihedral6.json"), "--copies", "1", "--max-degree", "6"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(doc["data"]["order"], 12);
    let (code, doc) = json(&["invariant-dims", &data("dihedral6.json"), "--copies", "2", "--max-degree", "2"]);
    assert_eq!(code, EXIT_PASS);
    let dims: Vec<u64> = doc["data"]["rows"].as_array().unwrap().iter().map(|r| r["dim_invariants"].as_u64().unwrap()).collect();
    // (0,0) then (0,1) (1,0) then (0,2) (1,1) (2,0)
    assert_eq!(dims, vec![1, 0, 0, 1, 1, 1]);
}

#[test]
fn custom_group_without_invariants_cannot_compare() {
    let dir = std::env::temp_dir().join(format!("polind-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let spec = dir.join("swap.json");
    std::fs::write(&spec, r#"{"generators": [[0, 1, 1, 0]]}"#).unwrap();
    let (code, doc) = json(&["compare", spec.to_str().unwrap(), "--copies", "2", "--max-degree", "2"]);
    assert_eq!(code, EXIT_INPUT_ERROR);
    assert_eq!(doc["error"]["kind"], "input");
}

#[test]
fn polarize_and_membership() {
    let (code, doc) = json(&["polarize", &data("p4.txt"), "--copies", "2"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(doc["data"]["components"].as_array().unwrap().len(), 5);
    let (code, doc) = json(&["membership", &data("target.txt"), &data("gens.txt")]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(doc["data"]["member"], true);
    assert_eq!(doc["data"]["certificate"]["terms"][0]["exponents"], serde_json::json!([0, 2, 0]));
}

#[test]
fn cap_exceeded_names_the_cap() {
    let out = run([
        "polind",
        "compare",
        &data("d4.json"),
        "--copies",
        "2",
        "--max-degree",
        "4",
        "--cap-span-products",
        "2",
    ]);
    assert_eq!(out.code, EXIT_CAP_EXCEEDED);
    assert!(out.stderr.contains("span_products"), "{}", out.stderr);
    let out = run(["polind", "certify", "dm", "--cap-group-order", "100"]);
    assert_eq!(out.code, EXIT_CAP_EXCEEDED);
    assert!(out.stderr.contains("group_order"));
}

#[test]
fn input_errors() {
    assert_eq!(run(["polind", "certify", "e8"]).code, EXIT_INPUT_ERROR);
    assert_eq!(run(["polind", "nullcone", "binary", "/nonexistent.json"]).code, EXIT_INPUT_ERROR);
    assert_eq!(run(["polind", "certify", "sl3", "--cap-monomials", "0"]).code, EXIT_INPUT_ERROR);
    let help = run(["polind", "--help"]);
    assert_eq!(help.code, EXIT_PASS);
    assert!(help.stdout.contains("certify"));
}

#[test]
fn text_report_lists_checks() {
    let out = run(["polind", "certify", "sl3"]);
    assert_eq!(out.code, EXIT_PASS);
    assert!(out.stdout.contains("PASS  closure_is_sl3  closure dimension 8 of 8"));
    assert!(out.stdout.ends_with("overall: PASS\n"));
}

#[test]
fn flags_override_environment() {
    let bin = env!("CARGO_BIN_EXE_polind");
    let seed_of = |extra: &[&str]| -> Value {
        let out = Command::new(bin)
            .args(["certify", "sl2-r1", "--format", "json"])
            .args(extra)
            .env("POLIND_SEED", "5")
            .env("POLIND_CAP_MONOMIALS", "777")
            .output()
            .unwrap();
        let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
        serde_json::json!([doc["seed"], doc["caps"]["monomials"]])
    };
    assert_eq!(seed_of(&[]), serde_json::json!([5, 777]));
    assert_eq!(seed_of(&["--seed", "9", "--cap-monomials", "888"]), serde_json::json!([9, 888]));
}

/// Stored reports for the certificate scenarios at the default seed.
#[test]
fn certificate_reports_match_golden_files() {
    for scenario in ["dm", "so5", "sl3", "torus", "sl2-r1"] {
        let path: PathBuf =
            [env!("CARGO_MANIFEST_DIR"), "tests", "golden", &format!("certify_{scenario}.json")].iter().collect();
        let golden = std::fs::read_to_string(&path).unwrap();
        let out = run(["polind", "certify", scenario, "--format", "json"]);
        assert_eq!(out.stdout, golden, "{scenario}");
        let expected = if scenario == "dm" { EXIT_CHECK_FAILED } else { EXIT_PASS };
        assert_eq!(out.code, expected, "{scenario}");
    }
}
