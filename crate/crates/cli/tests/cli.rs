use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conicfan")).args(args).output().unwrap()
}

fn run_env(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conicfan")).env("CONICFAN_GOLDEN_DIR", dir).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["--max-rank", "9", "verify"]).status.code(), Some(2));
    assert_eq!(run(&["table", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["entry", "A3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn tables_in_three_formats() {
    let text = run(&["table", "chow", "G2"]);
    assert!(text.status.success());
    assert!(stdout(&text).contains("-g2,l2"));

    let csv = stdout(&run(&["--format", "csv", "table", "cosets"]));
    let mut rdr = csv::Reader::from_reader(csv.as_bytes());
    let counts: Vec<String> = rdr.records().map(|r| r.unwrap()[3].to_string()).collect();
    assert_eq!(counts, ["6", "4", "6", "6", "8", "4", "4", "4", "4", "2"]);

    let json: serde_json::Value = serde_json::from_str(&stdout(&run(&["--format", "json", "table", "satake", "E7"]))).unwrap();
    assert_eq!(json[0]["restricted"], "F4");
    let json: serde_json::Value = serde_json::from_str(&stdout(&run(&["--format", "json", "table", "planes", "D4"]))).unwrap();
    assert_eq!(json["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn exported_fans_validate() {
    let dir = tempfile::tempdir().unwrap();
    for (g, which) in [("B5", "chow"), ("D4", "hilb"), ("E7", "hilb"), ("G2", "chow")] {
        let path = dir.path().join(format!("{g}-{which}.json"));
        let p = path.to_str().unwrap();
        assert!(run(&["export", "fan-json", g, "--which", which, "-o", p]).status.success());
        let o = run(&["validate-fan", g, p]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["complete"], true);
    }
    // one Hilbert cone alone is a valid fan but not complete
    let path = dir.path().join("partial.json");
    std::fs::write(&path, r#"{"space":"coroot(R'_O)","cones":[{"rays":[[-2,-3],[0,1]],"colors":[2]}]}"#).unwrap();
    let o = run(&["validate-fan", "G2", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    std::fs::write(&path, "not json").unwrap();
    assert_ne!(run(&["validate-fan", "G2", path.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn other_exports() {
    let dot = stdout(&run(&["export", "hasse-dot", "G2"]));
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("NPR"));
    let csv = stdout(&run(&["export", "constants-csv", "G2"]));
    assert!(csv.starts_with("alpha,beta,n\n"));
    let entry: serde_json::Value = serde_json::from_str(&stdout(&run(&["entry", "F4"]))).unwrap();
    assert_eq!(entry["double_cosets"], 4);
}

#[test]
fn seeded_output_is_reproducible() {
    let a = run(&["--format", "json", "--seed", "7", "--max-rank", "5", "verify", "chevalley"]);
    let b = run(&["--format", "json", "--seed", "7", "--max-rank", "5", "verify", "chevalley"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["--seed", "3", "contact-eq", "B3", "--samples", "300"]);
    let d = run(&["--seed", "3", "contact-eq", "B3", "--samples", "300"]);
    assert_eq!(c.stdout, d.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&c)).unwrap();
    assert!(v["counts"]["violations"].as_u64().unwrap() > 0);
}

#[test]
fn bless_writes_golden_files_with_a_diff() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_env(dir.path(), &["--max-rank", "4", "verify", "--bless"]);
    assert!(o.status.success());
    assert!(dir.path().join("gammas.json").exists());
    let o = run_env(dir.path(), &["--max-rank", "4", "verify", "symdata"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let path = dir.path().join("cosets.json");
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, text.replace("\"value\": 2", "\"value\": 3")).unwrap();
    let o = run_env(dir.path(), &["--max-rank", "4", "verify", "conicatlas"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("golden/cosets/G2"));

    let o = run_env(dir.path(), &["--max-rank", "4", "verify", "--bless"]);
    let all = format!("{}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    assert!(all.contains("--- a/cosets.json"), "{all}");
    assert!(all.contains("-      \"value\": 3\n+      \"value\": 2"), "{all}");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
}

#[test]
fn default_golden_files_pass_small_sweep() {
    let o = run(&["--max-rank", "4", "verify", "symdata"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("checks, 0 failed"));
}
