//! `conicfan`: reproduction tables, the verifier and exports.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use conicfan::chevalley::{self, StructureConstants};
use conicfan::conicatlas::{self, Table, TABLE_NAMES};
use conicfan::lunavust::{export_fan_json, is_colored_fan, is_complete, parse_fan_json, ColoredFan, Space};
use conicfan::rootcore::CartanType;
use conicfan::symdata::{self, Row};
use conicfan::verify::{self, Options, Scope};
use serde_json::json;

/// Overrides the directory holding the golden files.
const GOLDEN_ENV: &str = "CONICFAN_GOLDEN_DIR";

#[derive(Parser)]
#[command(name = "conicfan", version, about = "Colored fans of the spaces of conics on adjoint varieties")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest rank of the B and D series in sweeps.
    #[arg(long, global = true, default_value_t = conicatlas::DEFAULT_MAX_RANK)]
    max_rank: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportKind {
    FanJson,
    HasseDot,
    ConstantsCsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Chow,
    Hilb,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print one of: satake, chow, hilb, planes, cosets, colors.
    Table { name: String, g: Option<String> },
    /// Run the checks of a scope (all, rootcore, symdata, lunavust, conicatlas, chevalley).
    Verify {
        #[arg(default_value = "all")]
        scope: String,
        /// Rewrite the golden files after printing a diff.
        #[arg(long)]
        bless: bool,
        /// Skip the golden-file comparison.
        #[arg(long)]
        no_golden: bool,
    },
    /// Write a fan as JSON, an orbit Hasse diagram as DOT, or structure constants as CSV.
    Export {
        #[arg(value_enum)]
        kind: ExportKind,
        g: String,
        #[arg(long, value_enum, default_value_t = Which::Hilb)]
        which: Which,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Full JSON record for one type: fans, orbits and double cosets.
    Entry { g: String },
    /// Check a fan JSON file against the colored fan axioms for `g`.
    ValidateFan { g: String, path: PathBuf },
    /// Report on the tangent cubic `[v,[v,[v,e_ρ]]]` over the contact hyperplane.
    ContactEq {
        g: String,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

type Outcome = Result<(), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(m)) => {
            eprintln!("{m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    if cli.max_rank > 8 {
        return Err(usage("--max-rank is at most 8"));
    }
    match &cli.cmd {
        Cmd::Table { name, g } => cmd_table(cli, name, g.as_deref()),
        Cmd::Verify { scope, bless, no_golden } => cmd_verify(cli, scope, *bless, *no_golden),
        Cmd::Export { kind, g, which, output } => cmd_export(*kind, g, *which, output.as_deref()),
        Cmd::Entry { g } => {
            let e = conicatlas::build_entry(parse_type(g)?).map_err(|e| Failure::Check(e.to_string()))?;
            let v = conicatlas::entry_json(&e).map_err(|e| Failure::Check(e.to_string()))?;
            emit(&verify::canonical_json(&v), None)
        }
        Cmd::ValidateFan { g, path } => cmd_validate(g, path),
        Cmd::ContactEq { g, samples } => {
            let t = parse_type(g)?;
            let ad = conicatlas::adjoint_data(t).map_err(usage)?;
            let sc = StructureConstants::build(&ad.rd).map_err(|e| Failure::Check(e.to_string()))?;
            let r = chevalley::contact_implication_check(&sc, &ad, *samples, cli.seed);
            emit(&(serde_json::to_string_pretty(&r).expect("serializable") + "\n"), None)
        }
    }
}

fn parse_type(g: &str) -> Result<CartanType, Failure> {
    let t: CartanType = g.parse().map_err(|e| usage(format!("{g}: {e}")))?;
    Row::of(t).map_err(usage)?;
    Ok(t)
}

fn emit(text: &str, output: Option<&Path>) -> Outcome {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn render_text(t: &Table) -> String {
    let mut widths: Vec<usize> = t.headers.iter().map(|h| h.chars().count()).collect();
    for r in &t.rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(&t.headers);
    s.push_str(&line(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>()));
    for r in &t.rows {
        s.push_str(&line(r));
    }
    s
}

fn render_csv(t: &Table) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&t.headers).expect("in-memory write");
    for r in &t.rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn cmd_table(cli: &Cli, name: &str, g: Option<&str>) -> Outcome {
    if !TABLE_NAMES.contains(&name) {
        return Err(usage(format!("unknown table {name:?}; expected one of {}", TABLE_NAMES.join(", "))));
    }
    let types = match g {
        Some(g) => vec![parse_type(g)?],
        None => conicatlas::row_types(),
    };
    if cli.format == Format::Json && (name == "satake" || name == "colors") {
        let v: Vec<symdata::SatakeJson> = types
            .iter()
            .map(|&t| symdata::restricted_of(t).map(|r| symdata::satake_json(&r)))
            .collect::<Result<_, _>>()
            .map_err(|e| Failure::Check(e.to_string()))?;
        return emit(&(serde_json::to_string_pretty(&v).expect("serializable") + "\n"), None);
    }
    let table = conicatlas::table(name, &types).map_err(|e| Failure::Check(e.to_string()))?;
    let text = match cli.format {
        Format::Text => render_text(&table),
        Format::Csv => render_csv(&table),
        Format::Json => serde_json::to_string_pretty(&table).expect("serializable") + "\n",
    };
    emit(&text, None)
}

fn golden_dir() -> PathBuf {
    std::env::var_os(GOLDEN_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("golden"))
}

fn cmd_verify(cli: &Cli, scope: &str, bless: bool, no_golden: bool) -> Outcome {
    let scopes = Scope::parse_list(scope).ok_or_else(|| {
        usage(format!("unknown scope {scope:?}; expected all, rootcore, symdata, lunavust, conicatlas or chevalley"))
    })?;
    let dir = golden_dir();
    if bless {
        return bless_golden(&dir, cli.max_rank);
    }
    let opts = Options {
        max_rank: cli.max_rank,
        seed: cli.seed,
        golden_dir: (!no_golden).then_some(dir),
        ..Options::default()
    };
    let report = verify::run(&scopes, &opts);
    match cli.format {
        Format::Json => emit(&(serde_json::to_string_pretty(&report).expect("serializable") + "\n"), None)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["name", "scope", "passed", "detail"]).expect("in-memory write");
            for c in &report.checks {
                w.write_record([c.name.as_str(), c.scope.name(), if c.passed { "true" } else { "false" }, &c.detail])
                    .expect("in-memory write");
            }
            emit(&String::from_utf8(w.into_inner().expect("flush")).expect("utf-8"), None)?;
        }
        Format::Text => {
            let mut s = String::new();
            for c in report.failures() {
                s.push_str(&format!("FAIL {}: {}\n", c.name, c.detail));
            }
            for sc in &report.scopes {
                let n = report.checks.iter().filter(|c| c.scope == *sc).count();
                let bad = report.checks.iter().filter(|c| c.scope == *sc && !c.passed).count();
                s.push_str(&format!("{sc}: {} passed, {bad} failed\n", n - bad));
            }
            s.push_str(&format!("{} checks, {} failed\n", report.total, report.failed));
            emit(&s, None)?;
        }
    }
    if report.ok() {
        Ok(())
    } else {
        let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).take(10).collect();
        Err(Failure::Check(format!("verification failed: {}", names.join(", "))))
    }
}

fn bless_golden(dir: &Path, max_rank: usize) -> Outcome {
    let bundle = verify::golden_bundle(max_rank);
    std::fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
    let mut changed = 0;
    for (file, text) in &bundle {
        let path = dir.join(file);
        let old = std::fs::read_to_string(&path).unwrap_or_default();
        if old == *text {
            continue;
        }
        changed += 1;
        let diff = similar::TextDiff::from_lines(&old, text);
        print!("{}", diff.unified_diff().context_radius(2).header(&format!("a/{file}"), &format!("b/{file}")));
        std::fs::write(&path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    eprintln!("{changed} golden file(s) rewritten in {}", dir.display());
    Ok(())
}

fn cmd_export(kind: ExportKind, g: &str, which: Which, output: Option<&Path>) -> Outcome {
    let t = parse_type(g)?;
    let check = |e: &dyn ToString| Failure::Check(e.to_string());
    let text = match kind {
        ExportKind::ConstantsCsv => {
            let rd = conicfan::rootcore::build_root_datum(t);
            StructureConstants::build(&rd).map_err(|e| check(&e))?.to_csv()
        }
        ExportKind::FanJson | ExportKind::HasseDot => {
            let e = conicatlas::build_entry(t).map_err(|e| check(&e))?;
            let hilb = which == Which::Hilb;
            if kind == ExportKind::FanJson {
                let fan = if hilb { &e.hilb_fan } else { &e.chow_fan };
                export_fan_json(fan, Some(&e.rrd.satake.restricted_type.to_string()))
            } else {
                conicatlas::orbit_report(&e, hilb).map_err(|e| check(&e))?.dot
            }
        }
    };
    emit(&text, output)
}

fn cmd_validate(g: &str, path: &Path) -> Outcome {
    let t = parse_type(g)?;
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let rrd = symdata::restricted_of(t).map_err(usage)?;
    let space = Space::of(&rrd);
    let m = rrd.rank();
    let raw = parse_fan_json(&text, Some(m)).map_err(|e| Failure::Check(e.to_string()))?;
    let cones = raw.iter().map(|c| c.build(m)).collect::<Result<Vec<_>, _>>().map_err(|e| Failure::Check(e.to_string()))?;
    let fan = ColoredFan::from_maximal(&cones, &space);
    let axioms = is_colored_fan(&fan, &space);
    let complete = is_complete(&fan, &space);
    let report = json!({
        "g": t.to_string(),
        "cones": fan.members.len(),
        "maximal": fan.maximal().len(),
        "colored_fan": axioms.is_ok(),
        "diagnostic": axioms.as_ref().err().map(|d| d.to_string()),
        "complete": complete,
    });
    emit(&verify::canonical_json(&report), None)?;
    if axioms.is_ok() && complete {
        Ok(())
    } else {
        Err(Failure::Check("not a complete colored fan".into()))
    }
}
