//! Acceptance criteria, one PASS/FAIL line each on stderr.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use conicfan::conicatlas::double_coset_table;
use conicfan::qmath::{dot, q};
use conicfan::reference;
use conicfan::symdata::{restricted_of, Row};
use conicfan::verify::{self, Check, Options, Report, Scope, GOLDEN_FILES};

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

/// Passes when every selected check passes and at least `min` were selected.
fn from_checks<'a>(checks: impl Iterator<Item = &'a Check>, min: usize) -> Outcome {
    let sel: Vec<&Check> = checks.collect();
    let bad: Vec<String> = sel.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect();
    if sel.len() < min {
        return outcome(false, format!("only {} checks ran", sel.len()));
    }
    outcome(bad.is_empty(), if bad.is_empty() { format!("{} checks", sel.len()) } else { bad.join("; ") })
}

fn suffix_in<'a>(r: &'a Report, scope: &'a str, suffixes: &'a [&'a str]) -> impl Iterator<Item = &'a Check> + 'a {
    r.checks.iter().filter(move |c| {
        let mut parts = c.name.split('/');
        parts.next() == Some(scope) && suffixes.iter().any(|s| c.name.ends_with(&format!("/{s}")))
    })
}

fn golden_for<'a>(r: &'a Report, files: &'a [&'a str]) -> impl Iterator<Item = &'a Check> + 'a {
    r.checks.iter().filter(move |c| files.iter().any(|f| c.name.starts_with(&format!("golden/{f}/"))))
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn criterion1() -> Outcome {
    let (res, dt) = timed(|| {
        let mut bad = Vec::new();
        for row in Row::ALL {
            let t = row.representative();
            let r = restricted_of(t).map_err(|e| e.to_string())?;
            let mut k = r.k_types.clone();
            k.sort();
            let mut want = reference::canonical_types(&reference::k_type_names(t));
            want.sort();
            if k != want {
                bad.push(format!("{t} k"));
            }
            if r.satake.restricted_type.to_string() != reference::restricted_type(row) {
                bad.push(format!("{t} restricted type"));
            }
            let got: BTreeSet<(usize, usize)> = r.satake.restriction.iter().map(|(&a, &b)| (a, b)).collect();
            if got != reference::lambda_assignment(row).into_iter().collect() {
                bad.push(format!("{t} λ assignment"));
            }
        }
        Ok::<_, String>(bad)
    });
    match res {
        Ok(bad) if bad.is_empty() && dt < Duration::from_secs(1) => outcome(true, format!("{dt:.2?}")),
        Ok(bad) => outcome(false, format!("{bad:?} in {dt:.2?}")),
        Err(e) => outcome(false, e),
    }
}

fn criterion2() -> Outcome {
    let mut seen = BTreeSet::new();
    let mut bad = Vec::new();
    for t in verify::sweep_types(conicfan::conicatlas::DEFAULT_MAX_RANK) {
        let r = restricted_of(t).unwrap();
        let name = r.satake.restricted_type.to_string();
        for i in 1..=r.rank() {
            for (j, g) in r.gammas.iter().enumerate() {
                let want = q(i64::from(i == j + 1));
                if dot(&r.lambda_weight(i), g) != want {
                    bad.push(format!("{t} <λ{i},γ{}>", j + 1));
                }
            }
        }
        if r.gammas != reference::gamma_closed_form(&name) {
            bad.push(format!("{t} closed form"));
        }
        seen.insert(name);
    }
    let families: BTreeSet<String> = ["B3", "B4", "D4", "F4", "G2"].iter().map(|s| s.to_string()).collect();
    outcome(bad.is_empty() && seen == families, format!("{bad:?} families {seen:?}"))
}

fn criterion6() -> Outcome {
    let (res, dt) = timed(double_coset_table);
    match res {
        Ok(v) => {
            let got: Vec<usize> = v.iter().map(|(_, n)| *n).collect();
            let ok = got == [6, 4, 6, 6, 8, 4, 4, 4, 4, 2] && dt < Duration::from_secs(30);
            outcome(ok, format!("{got:?} in {dt:.2?}"))
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn exe() -> Command {
    Command::new(env!("CARGO_BIN_EXE_conicfan"))
}

fn copy_golden(to: &Path) {
    for f in GOLDEN_FILES {
        std::fs::copy(golden_dir().join(format!("{f}.json")), to.join(format!("{f}.json"))).unwrap();
    }
}

/// Changes one leaf of the `G2` (or first) entry of a golden file.
fn perturb(path: &Path) {
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let entries = v["entries"].as_object_mut().unwrap();
    let key = if entries.contains_key("G2") { "G2".to_string() } else { entries.keys().next().unwrap().clone() };
    let leaf = first_leaf(&mut entries[&key]["value"]);
    *leaf = match leaf.take() {
        serde_json::Value::Number(n) => serde_json::json!(n.as_i64().unwrap_or(0) + 1),
        serde_json::Value::Bool(b) => serde_json::json!(!b),
        serde_json::Value::String(s) => serde_json::json!(format!("{s}1")),
        _ => serde_json::json!(17),
    };
    std::fs::write(path, serde_json::to_string_pretty(&v).unwrap()).unwrap();
}

fn first_leaf(v: &mut serde_json::Value) -> &mut serde_json::Value {
    let mut path = String::new();
    let mut cur = &*v;
    loop {
        match cur {
            serde_json::Value::Array(a) if !a.is_empty() => {
                path.push_str("/0");
                cur = &a[0];
            }
            serde_json::Value::Object(m) if !m.is_empty() => {
                let k = m.keys().next().unwrap();
                path.push('/');
                path.push_str(&k.replace('~', "~0").replace('/', "~1"));
                cur = &m[k];
            }
            _ => break,
        }
    }
    v.pointer_mut(&path).unwrap()
}

fn criterion11() -> Outcome {
    let (out, dt) = timed(|| exe().args(["verify", "all"]).output().unwrap());
    if out.status.code() != Some(0) || dt > Duration::from_secs(180) {
        return outcome(false, format!("exit {:?} in {dt:.2?}: {}", out.status.code(), String::from_utf8_lossy(&out.stdout)));
    }
    let mut bad = Vec::new();
    for f in GOLDEN_FILES {
        let dir = tempfile::tempdir().unwrap();
        copy_golden(dir.path());
        perturb(&dir.path().join(format!("{f}.json")));
        let scope = verify::golden_scope(f).name();
        let out = exe()
            .env("CONICFAN_GOLDEN_DIR", dir.path())
            .args(["--max-rank", "4", "verify", scope])
            .output()
            .unwrap();
        let text = String::from_utf8_lossy(&out.stdout);
        let named = text.lines().any(|l| l.starts_with("FAIL") && l.contains(&format!("golden/{f}/")));
        if out.status.code() != Some(1) || !named {
            bad.push(format!("{f}: exit {:?}", out.status.code()));
        }
        if f == "gammas" && !text.contains("gamma-duality/golden/G2") {
            bad.push("gammas: duality not flagged".into());
        }
    }
    outcome(bad.is_empty(), format!("verify all {dt:.2?}; injections {bad:?}"))
}

#[test]
fn acceptance() {
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    let report = |n: usize, name: &'static str, o: Outcome, results: &mut Vec<(usize, &str, Outcome)>| {
        let mut err = std::io::stderr();
        writeln!(err, "{} criterion {n:>2} {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail).unwrap();
        results.push((n, name, o));
    };

    let opts = Options { golden_dir: Some(golden_dir()), ..Options::default() };
    report(1, "Satake data of the ten rows", criterion1(), &mut results);
    report(2, "gamma duality and closed forms", criterion2(), &mut results);

    let (luna, _) = timed(|| verify::run(&[Scope::Lunavust], &opts));
    let fan_checks = [
        "chow-cone",
        "hilb-cones",
        "chow-fan-axioms",
        "hilb-fan-axioms",
        "chow-strictly-convex",
        "hilb-strictly-convex",
        "chow-complete",
        "hilb-complete",
        "chow-json-roundtrip",
        "hilb-json-roundtrip",
        "hilb-simple-iff-exceptional",
    ];
    report(3, "Chow and Hilbert fans", from_checks(suffix_in(&luna, "lunavust", &fan_checks).chain(golden_for(&luna, &["chow", "hilb"])), 180), &mut results);
    report(4, "colored face lists", from_checks(suffix_in(&luna, "lunavust", &["faces-chow", "faces-hilb"]).chain(golden_for(&luna, &["faces"])), 45), &mut results);
    report(
        5,
        "orbit counts",
        from_checks(
            suffix_in(&luna, "lunavust", &["orbit-count-chow", "orbit-count-hilb", "hilb-equals-chow-iff-g2"]).chain(golden_for(&luna, &["orbitcounts"])),
            60,
        ),
        &mut results,
    );
    report(6, "double cosets", criterion6(), &mut results);

    let sym = verify::run(&[Scope::Symdata], &opts);
    report(
        7,
        "spherical roots, color types, a_D",
        from_checks(
            suffix_in(&sym, "symdata", &["color-count", "color-types", "spherical-roots", "a-d4-formula"]).chain(golden_for(&sym, &["colors"])),
            70,
        ),
        &mut results,
    );
    let ruzzi = luna.checks.iter().filter(|c| c.name.starts_with("lunavust/") && c.name.contains("/ruzzi-"));
    report(8, "Ruzzi smoothness", from_checks(ruzzi, 40), &mut results);

    let atlas = verify::run(&[Scope::Conicatlas], &opts);
    let iso = suffix_in(&atlas, "conicatlas", &["line-stabilizer", "isotropy-chow", "isotropy-hilb", "hilb-isotropy"])
        .chain(suffix_in(&sym, "symdata", &["twisted-parabolics"]));
    report(9, "isotropy equations", from_checks(iso, 80), &mut results);

    let (chev, dt) = timed(|| verify::run(&[Scope::Chevalley], &opts));
    let mut c10 = from_checks(chev.checks.iter(), 250);
    let required = ["chevalley/E8/jacobi", "chevalley/E8/twistor-extremal", "chevalley/E8/general-witness", "chevalley/G2/implication", "chevalley/B3/non-planar-witness"];
    for r in required {
        if !chev.checks.iter().any(|c| c.name == r) {
            c10.ok = false;
            c10.detail.push_str(&format!("; {r} missing"));
        }
    }
    c10.ok &= dt < Duration::from_secs(60);
    c10.detail = format!("{} in {dt:.2?}", c10.detail);
    report(10, "Chevalley suite", c10, &mut results);

    report(11, "end to end", criterion11(), &mut results);

    let failed: Vec<usize> = results.iter().filter(|(_, _, o)| !o.ok).map(|(n, _, _)| *n).collect();
    assert!(failed.is_empty(), "failed criteria {failed:?}");
}
