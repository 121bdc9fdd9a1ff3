use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toeplitz"))
        .args(args)
        .env_remove("TOEPLITZ_ORACLE_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let o = run(args);
    let text = stdout(&o);
    let last = text.lines().last().expect("some output");
    (
        serde_json::from_str(last).unwrap(),
        o.status.code().unwrap(),
    )
}

#[test]
fn classify_cocoonery_json() {
    let (v, code) = json(&["--json", "classify", "--n", "30", "--offsets", "5,10,15"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "classify");
    assert_eq!(v["params"]["n"], 30);
    assert_eq!(v["params"]["offsets"], serde_json::json!([5, 10, 15]));
    let claw = &v["result"]["claw_free"];
    assert_eq!(claw["claw_free"], true);
    assert_eq!(claw["rule"], "Cocoonery");
    assert_eq!(claw["certificate"]["step"], 5);
    assert_eq!(claw["certificate"]["terms"], 3);
    assert_eq!(v["result"]["line_graph"]["is_line"], false);
}

#[test]
fn classify_reports_witness_claw() {
    let (v, code) = json(&[
        "--json",
        "classify",
        "--n",
        "12",
        "--offsets",
        "1,5,6",
        "--witness",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["claw_free"]["claw_free"], false);
    assert_eq!(v["result"]["claw_free"]["witness"], "(6;1,5,12)");

    let o = run(&["classify", "--n", "12", "--offsets", "1,5,6", "--witness"]);
    assert!(stdout(&o).contains("(6;1,5,12)"));
}

#[test]
fn classify_all_includes_oracle_properties() {
    let (v, code) = json(&[
        "--json",
        "classify",
        "--n",
        "10",
        "--offsets",
        "3,6",
        "--all",
    ]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["chordal"]["chordal"], true);
    assert_eq!(r["interval"], true);
    assert_eq!(r["clique_number"], 3);
    assert_eq!(
        r["line_graph"]["component_multiset"],
        serde_json::json!([["K3", 2], ["Diamond", 1]])
    );
}

#[test]
fn components_of_cocoonery() {
    let (v, code) = json(&["--json", "components", "--n", "30", "--offsets", "5,10,15"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["component_count"], 5);
    let comps = r["components"].as_array().unwrap();
    assert_eq!(comps.len(), 5);
    assert!(comps.iter().all(|c| c["target"] == "T_6<1,2,3>"));
    assert_eq!(
        comps[0]["vertices"],
        serde_json::json!([1, 6, 11, 16, 21, 26])
    );
}

#[test]
fn export_formats() {
    let o = run(&[
        "export",
        "--n",
        "20",
        "--offsets",
        "5,10,15",
        "--format",
        "adjlist",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("1: 6 11 16"));

    let (v, code) = json(&[
        "--json",
        "export",
        "--n",
        "5",
        "--offsets",
        "2,3",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["order"], 5);
    assert_eq!(v["result"]["edges"].as_array().unwrap().len(), 5);

    let o = run(&["export", "--n", "3", "--offsets", "1,2", "--format", "dot"]);
    let text = stdout(&o);
    assert!(text.starts_with("graph "));
    assert_eq!(text.matches(" -- ").count(), 3);
}

#[test]
fn invalid_parameters_exit_2() {
    for args in [
        &["classify", "--n", "5", "--offsets", "5"][..],
        &["classify", "--n", "9", "--offsets", "3,2"],
        &["classify", "--n", "9", "--offsets", "2,2"],
        &["export", "--n", "9", "--offsets", "1,2", "--format", "xml"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn invalid_parameters_json_envelope() {
    let (v, code) = json(&["--json", "classify", "--n", "5", "--offsets", "5"]);
    assert_eq!(code, 2);
    assert!(v["error"]["kind"].is_string());
    assert!(v["error"]["message"].as_str().unwrap().contains("5"));
}

#[test]
fn undecided_exits_3() {
    let o = run(&["classify", "--n", "80", "--offsets", "3,5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("undecided"));
}

#[test]
fn sweep_is_deterministic_and_clean() {
    let args = [
        "--json", "sweep", "--k", "2..3", "--t-max", "7", "--n-max", "16", "--check", "claw",
        "--check", "line", "--check", "chordal",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let summary: Value = text
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .find(|v| v["record"] == "summary")
        .unwrap();
    assert_eq!(summary["discrepancies"], 0);
    assert!(summary["cells_evaluated"].as_u64().unwrap() > 100);
    assert!(!text.contains("\"timing\""));
}

#[test]
fn sweep_rejects_unknown_check() {
    let o = run(&["sweep", "--k", "2", "--check", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn explain_lists_rules_in_order() {
    let o = run(&["explain", "--n", "12", "--offsets", "4,8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let paths = text.find("K1Paths").unwrap();
    let cocoonery = text.find("Cocoonery").unwrap();
    assert!(paths < cocoonery);
}

#[test]
fn discrepancy_exits_4_and_still_reports() {
    let o = run(&[
        "--json",
        "sweep",
        "--k",
        "2",
        "--t-max",
        "5",
        "--n-max",
        "10",
        "--check",
        "claw",
        "--inject-fault",
        "7:2,3",
    ]);
    assert_eq!(o.status.code(), Some(4));
    let text = stdout(&o);
    let records: Vec<Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let bad: Vec<&Value> = records
        .iter()
        .filter(|r| r["record"] == "discrepancy")
        .collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0]["params"]["n"], 7);
    assert_eq!(records.last().unwrap()["result"]["clean"], false);
}

#[test]
fn fibonacci_witness_from_cli() {
    let o = run(&[
        "classify",
        "--n",
        "14",
        "--offsets",
        "1,2,3,5,8,13",
        "--witness",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(3;1,5,11)"));
}

#[test]
fn json_flag_after_subcommand() {
    let (v, code) = json(&["classify", "--n", "30", "--offsets", "5,10,15", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["claw_free"]["rule"], "Cocoonery");
}

#[test]
fn gcd_components_from_cli() {
    let (v, _) = json(&["--json", "components", "--n", "10", "--offsets", "4,6"]);
    assert_eq!(v["result"]["component_count"], 2);
    assert!(v["result"]["components"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["target"] == "T_5<2,3>"));
    let (v, _) = json(&["--json", "components", "--n", "5", "--offsets", "1,3"]);
    assert_eq!(v["result"]["component_count"], 1);
}

#[test]
fn documented_sweeps_pass() {
    for args in [
        &["sweep", "--k", "2", "--t-max", "10", "--check", "claw"][..],
        &["sweep", "--k", "3", "--check", "catalogue37"],
        &["sweep", "--suite", "acceptance"],
    ] {
        assert_eq!(run(args).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn oracle_bound_env_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_toeplitz"))
        .args([
            "--json",
            "classify",
            "--n",
            "12",
            "--offsets",
            "1,2",
            "--all",
        ])
        .env("TOEPLITZ_ORACLE_MAX_N", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["result"]["chordal"]["skipped"].is_string());
    assert!(v["result"]["interval"]["skipped"].is_string());

    let (v, _) = json(&[
        "--json",
        "classify",
        "--n",
        "12",
        "--offsets",
        "1,2",
        "--all",
    ]);
    assert_eq!(v["result"]["chordal"]["chordal"], true);
}

#[test]
fn acceptance_suite_output_is_byte_identical() {
    let a = run(&["--json", "sweep", "--suite", "acceptance"]);
    let b = run(&["--json", "sweep", "--suite", "acceptance"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
