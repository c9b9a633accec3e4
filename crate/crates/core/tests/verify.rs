use std::fs;

use conicfan::verify::{golden_bundle, run, Options, Scope};

fn small() -> Options {
    Options { max_rank: 6, g2_samples: 500, jacobi_samples: 2000, twistor_samples: 3, ..Options::default() }
}

#[test]
fn sweep_is_clean_and_deterministic() {
    let a = run(&Scope::ALL, &small());
    for c in a.failures() {
        eprintln!("FAIL {}: {}", c.name, c.detail);
    }
    assert!(a.ok());
    assert!(a.total >= 200, "{} checks", a.total);
    let b = run(&Scope::ALL, &small());
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn golden_round_trip_and_perturbation() {
    let dir = std::env::temp_dir().join(format!("conicfan-golden-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    for (name, text) in golden_bundle(6) {
        fs::write(dir.join(name), text).unwrap();
    }
    let opts = Options { golden_dir: Some(dir.clone()), ..small() };
    let r = run(&[Scope::Symdata], &opts);
    assert!(r.ok());
    assert!(r.checks.iter().any(|c| c.name.starts_with("golden/gammas/")));

    let path = dir.join("gammas.json");
    let text = fs::read_to_string(&path).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["entries"]["G2"]["value"][0] = serde_json::json!("5/2 3");
    fs::write(&path, serde_json::to_string_pretty(&v).unwrap()).unwrap();
    let r = run(&[Scope::Symdata], &opts);
    assert!(!r.ok());
    assert!(r.failures().any(|c| c.name.contains("gamma-duality")));
    fs::remove_dir_all(&dir).unwrap();
}
