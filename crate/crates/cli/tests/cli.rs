use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclic-pir")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = run(&all);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn code_info_with_defining_cosets() {
    let v = json(&["code", "info", "q=2 n=31 cosets=0,1,3", "--defining"]);
    assert_eq!(v["n"], 31);
    assert_eq!(v["k"], 20);
    assert_eq!(v["bch"], 6);
    assert_eq!(v["defining_cosets"], serde_json::json!([0, 1, 3]));
    assert_eq!(v["distance"]["lower"], 6);
    assert_eq!(v["distance"]["exact"], true);
    let text = stdout(&run(&["code", "info", "q=2 n=31 cosets=0,1,3", "--defining"]));
    assert!(text.contains("[31,20,6]") && text.contains("BCH bound 6"), "{text}");
}

#[test]
fn star_is_the_minkowski_sum() {
    let v = json(&["star", "q=2 n=7 cosets=0", "q=2 n=7 cosets=0,1"]);
    assert_eq!(v["code"]["cosets"], serde_json::json!([0, 1]));
    assert_eq!(v["k"], 4);
}

#[test]
fn dual_negates_the_complement() {
    let v = json(&["dual", "q=2 n=7 cosets=0,1"]);
    assert_eq!(v["code"]["cosets"], serde_json::json!([1]));
    assert_eq!(v["k"], 3);
}

#[test]
fn json_output_round_trips() {
    let first = json(&["code", "info", "q=2 n=63 cosets=0,1,3,7,9,11,15,21,23,27,31"]);
    let code = &first["code"];
    let reps: Vec<String> = code["cosets"].as_array().unwrap().iter().map(|r| r.to_string()).collect();
    let spec = format!("q={} n={} cosets={}", code["q"], code["n"], reps.join(","));
    assert_eq!(json(&["code", "info", &spec]), first);

    let eval = json(&["pir", "eval", "q=2 n=63 cosets=21", &spec]);
    assert_eq!(eval["params"]["privacy"]["lo"], 19);
    assert_eq!(eval["params"]["rate"], "6/63");
}

#[test]
fn malformed_spec_exits_2_with_position() {
    let o = run(&["code", "info", "q=2 n=31 colors=1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("position 9"), "{err}");
    assert!(err.lines().any(|l| l.trim_end() == format!("  {}^", " ".repeat(9))), "{err}");

    assert_eq!(run(&["code", "info", "q=2 n=30 cosets=1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["table", "2"]).status.code(), Some(2));
}

#[test]
fn table_one_default_budget() {
    let v = json(&["table", "1"]);
    assert_eq!(v["counts"]["MISMATCH"], 0);
    assert_eq!(v["budget"], 1u64 << 26);
    let cells: Vec<&Value> = v["rows"].as_array().unwrap().iter().flat_map(|r| r["cells"].as_array().unwrap()).collect();
    for c in &cells {
        if c["class"] == "bound-only" || c["class"] == "exact-at-deep" {
            assert_ne!(c["verdict"], "MISMATCH", "{c}");
        }
    }
    assert!(cells.iter().any(|c| c["verdict"] == "BOUND-CONSISTENT"));
}

#[test]
fn verbatim_table_one_exits_1() {
    let o = run(&["table", "1", "--verbatim"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("6 MISMATCH"));
}

#[test]
fn privacy_check_exit_codes() {
    let pass = run(&["pir", "privacy-check", "q=2 n=7 cosets=0", "q=2 n=7 cosets=0,1", "--t", "3"]);
    assert_eq!(pass.status.code(), Some(0));
    let fail = run(&["pir", "privacy-check", "q=2 n=7 cosets=0", "q=2 n=7 cosets=0,1", "--t", "4", "--json"]);
    assert_eq!(fail.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&fail.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);
}

#[test]
fn simulate_writes_a_transcript() {
    let dir = std::env::temp_dir().join(format!("cyclic-pir-transcript-{}", std::process::id()));
    let v = json(&[
        "pir",
        "simulate",
        "q=2 n=63 cosets=21",
        "q=2 n=63 cosets=0,1,3,7,9,11,15,21,23,27,31",
        "--file",
        "2",
        "--seed",
        "5",
        "--transcript",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(v["correct"], true);
    assert_eq!(v["decomposition_failures"], 0);
    let log = std::fs::read_to_string(&dir).unwrap();
    std::fs::remove_file(&dir).ok();
    let rounds: Vec<Value> = log.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rounds.len() as u64, v["rounds"].as_u64().unwrap());
    for (i, r) in rounds.iter().enumerate() {
        assert_eq!(r["round"], i);
        assert_eq!(r["queries_digest"].as_str().unwrap().len(), 64);
        assert_eq!(r["responses"].as_array().unwrap().len(), 63);
    }
}

#[test]
fn rm_and_cosets() {
    let v = json(&["rm", "as-cyclic", "--r", "2", "--m", "5", "--shortened"]);
    assert_eq!((v["n"].as_u64(), v["k"].as_u64(), v["distance"]["lower"].as_u64()), (Some(31), Some(15), Some(8)));
    let p = json(&["rm", "puncture", "--r", "1", "--m", "4"]);
    assert_eq!((p["k"].as_u64(), p["distance"]["lower"].as_u64()), (Some(5), Some(7)));
    let full = json(&["rm", "build", "--r", "1", "--m", "4"]);
    assert_eq!((full["n"].as_u64(), full["distance"]["lower"].as_u64()), (Some(16), Some(8)));
    let cosets = json(&["coset", "--n", "15"]);
    let sizes: Vec<usize> = cosets.as_array().unwrap().iter().map(|c| c["members"].as_array().unwrap().len()).collect();
    assert_eq!(sizes, [1, 4, 4, 2, 4]);
}

#[test]
fn search_small_length() {
    let v = json(&["search", "--n", "7", "--min-rate", "1/7", "--top", "1"]);
    let best = &v["hits"][0];
    assert_eq!(best["C"]["cosets"], serde_json::json!([0]));
    assert_eq!(best["D"]["cosets"], serde_json::json!([1, 3]));
    assert_eq!(best["params"]["privacy"]["lo"], 6);
    assert_eq!(v["partial"], false);
}

#[test]
fn budget_flag_forms() {
    assert_eq!(json(&["code", "info", "q=2 n=7 cosets=1", "--budget", "2^10"])["distance"]["budget"], 1024);
    assert_eq!(json(&["code", "info", "q=2 n=7 cosets=1", "--deep"])["distance"]["budget"], 1u64 << 29);
    assert_eq!(run(&["code", "info", "q=2 n=7 cosets=1", "--budget", "3^4"]).status.code(), Some(2));
}
