//! Named checks across all modules and comparison with golden files.
//!
//! Every check is a pure function of the type, the options and the seed, so
//! two runs with equal options produce identical reports.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::chevalley::{self, StructureConstants};
use crate::conicatlas::{self, AdjointData, ConicAtlasEntry};
use crate::lunavust::{
    export_fan_json, fm, is_colored_fan, is_complete, parse_fan_json, ruzzi_smooth, ruzzi_with_basis,
    ColoredCone, ColoredFan, QCone, Space,
};
use crate::notation;
use crate::qmath::{self, q, qf, QVec};
use crate::reference::{self, OrbitLabel};
use crate::rootcore::{component_types, format_types, CartanType, ParabolicSubset, Series};
use crate::symdata::{self, ColorType, FanFamily, RestrictedDatum, Row};
use crate::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Rootcore,
    Symdata,
    Lunavust,
    Conicatlas,
    Chevalley,
}

impl Scope {
    pub const ALL: [Scope; 5] = [Scope::Rootcore, Scope::Symdata, Scope::Lunavust, Scope::Conicatlas, Scope::Chevalley];

    pub fn name(&self) -> &'static str {
        match self {
            Scope::Rootcore => "rootcore",
            Scope::Symdata => "symdata",
            Scope::Lunavust => "lunavust",
            Scope::Conicatlas => "conicatlas",
            Scope::Chevalley => "chevalley",
        }
    }

    /// `all` or a single scope name.
    pub fn parse_list(s: &str) -> Option<Vec<Scope>> {
        if s == "all" {
            return Some(Scope::ALL.to_vec());
        }
        Scope::ALL.iter().find(|x| x.name() == s).map(|x| vec![*x])
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub scope: Scope,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct Options {
    /// Largest rank of the classical series `B_r`, `D_r`.
    pub max_rank: usize,
    pub seed: u64,
    pub g2_samples: usize,
    pub jacobi_samples: usize,
    pub twistor_samples: usize,
    pub golden_dir: Option<PathBuf>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_rank: conicatlas::DEFAULT_MAX_RANK,
            seed: 0,
            g2_samples: 10_000,
            jacobi_samples: 100_000,
            twistor_samples: 20,
            golden_dir: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub scopes: Vec<Scope>,
    pub max_rank: usize,
    pub seed: u64,
    pub total: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Sink<'a> {
    scopes: &'a [Scope],
    checks: Vec<Check>,
}

impl Sink<'_> {
    fn wants(&self, s: Scope) -> bool {
        self.scopes.contains(&s)
    }

    fn push(&mut self, scope: Scope, name: String, passed: bool, detail: impl Into<String>) {
        if self.wants(scope) {
            let detail = if passed { String::new() } else { detail.into() };
            self.checks.push(Check { name, scope, passed, detail });
        }
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, scope: Scope, name: String, got: T, want: T) {
        let passed = got == want;
        let detail = format!("got {got:?}, expected {want:?}");
        self.push(scope, name, passed, detail);
    }
}

/// Types covered by a sweep capped at `max_rank`.
pub fn sweep_types(max_rank: usize) -> Vec<CartanType> {
    reference::default_types(max_rank)
}

fn type_seed(seed: u64, t: CartanType) -> u64 {
    // FNV-1a over the type name keeps per-type streams independent of the sweep
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in t.to_string().bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed
}

/// Runs all checks in `scopes`, plus golden comparisons when `golden_dir` is set.
pub fn run(scopes: &[Scope], opts: &Options) -> Report {
    let types = sweep_types(opts.max_rank);
    let per_type: Vec<(Vec<Check>, BTreeMap<String, Value>)> =
        types.par_iter().map(|&t| check_type(t, scopes, opts)).collect();
    let mut checks = Vec::new();
    let mut golden: BTreeMap<String, BTreeMap<String, Value>> = BTreeMap::new();
    for (t, (c, g)) in types.iter().zip(per_type) {
        checks.extend(c);
        for (file, v) in g {
            golden.entry(file).or_default().insert(t.to_string(), v);
        }
    }
    let mut sink = Sink { scopes, checks };
    family_checks(&mut sink);
    if let Some(dir) = &opts.golden_dir {
        add_family_golden(&mut golden);
        golden_checks(&mut sink, dir, &golden);
    }
    let checks = sink.checks;
    let failed = checks.iter().filter(|c| !c.passed).count();
    Report { scopes: scopes.to_vec(), max_rank: opts.max_rank, seed: opts.seed, total: checks.len(), failed, checks }
}

fn check_type(t: CartanType, scopes: &[Scope], opts: &Options) -> (Vec<Check>, BTreeMap<String, Value>) {
    let mut sink = Sink { scopes, checks: Vec::new() };
    let g = t.to_string();
    let mut golden = BTreeMap::new();
    let row = Row::of(t).expect("supported type");
    let ad = match conicatlas::adjoint_data(t) {
        Ok(ad) => ad,
        Err(e) => {
            for &s in scopes {
                sink.push(s, format!("{s}/{g}/build"), false, e.to_string());
            }
            return (sink.checks, golden);
        }
    };
    rootcore_checks(&mut sink, t, row, &ad);
    let rrd = match symdata::restricted_of(t) {
        Ok(r) => r,
        Err(e) => {
            sink.push(Scope::Symdata, format!("symdata/{g}/build"), false, e.to_string());
            return (sink.checks, golden);
        }
    };
    symdata_checks(&mut sink, t, row, &rrd);
    if opts.golden_dir.is_some() && sink.wants(Scope::Symdata) {
        golden.insert("satake".into(), satake_value(&rrd));
        golden.insert("colors".into(), colors_value(&rrd));
    }
    if sink.wants(Scope::Lunavust) || sink.wants(Scope::Conicatlas) {
        match conicatlas::build_entry(t) {
            Ok(entry) => {
                lunavust_checks(&mut sink, t, &entry);
                conicatlas_checks(&mut sink, t, row, &entry);
                if opts.golden_dir.is_some() {
                    match entry_golden(&entry) {
                        Ok(m) => golden.extend(m.into_iter().filter(|(f, _)| sink.wants(golden_scope(f)))),
                        Err(e) => sink.push(Scope::Conicatlas, format!("conicatlas/{g}/golden-values"), false, e),
                    }
                }
            }
            Err(e) => {
                sink.push(Scope::Lunavust, format!("lunavust/{g}/build"), false, e.to_string());
                sink.push(Scope::Conicatlas, format!("conicatlas/{g}/build"), false, e.to_string());
            }
        }
    }
    if sink.wants(Scope::Chevalley) {
        chevalley_checks(&mut sink, t, &ad, opts);
    }
    (sink.checks, golden)
}

fn positive_root_count(t: CartanType) -> usize {
    let r = t.rank;
    match (t.series, r) {
        (Series::A, _) => r * (r + 1) / 2,
        (Series::B | Series::C, _) => r * r,
        (Series::D, _) => r * (r - 1),
        (Series::E, 6) => 36,
        (Series::E, 7) => 63,
        (Series::E, _) => 120,
        (Series::F, _) => 24,
        (Series::G, _) => 6,
    }
}

fn weyl_order_oracle(t: CartanType) -> u128 {
    let r = t.rank as u128;
    let fact = (1..=r).product::<u128>();
    match (t.series, t.rank) {
        (Series::A, _) => fact * (r + 1),
        (Series::B | Series::C, _) => fact << r,
        (Series::D, _) => fact << (r - 1),
        (Series::E, 6) => 51_840,
        (Series::E, 7) => 2_903_040,
        (Series::E, _) => 696_729_600,
        (Series::F, _) => 1152,
        (Series::G, _) => 12,
    }
}

fn rootcore_checks(sink: &mut Sink, t: CartanType, row: Row, ad: &AdjointData) {
    let s = Scope::Rootcore;
    let g = t.to_string();
    let rd = &ad.rd;
    sink.eq(s, format!("rootcore/{g}/positive-count"), rd.num_positive(), positive_root_count(t));
    sink.eq(s, format!("rootcore/{g}/weyl-order"), rd.weyl_order(), weyl_order_oracle(t));
    let top = ad.rho.clone();
    let is_highest = rd.labels().iter().all(|&l| {
        let a = rd.simple_root(l).unwrap();
        !rd.is_root(&top.iter().zip(&a).map(|(x, y)| x + y).collect::<Vec<_>>())
    });
    let max_norm = rd.roots().iter().map(|r| rd.norm2(r)).max().unwrap();
    sink.push(s, format!("rootcore/{g}/highest-root"), is_highest && rd.norm2(&top) == max_norm, "ρ is not the long highest root");
    sink.eq(s, format!("rootcore/{g}/contact-node"), ad.j0, reference::contact_node(row));
    let contact_ok =
        rd.labels().iter().all(|&l| (rd.pairing(&top, l).unwrap() != 0) == (l == ad.j0));
    sink.push(s, format!("rootcore/{g}/contact-node-unique"), contact_ok, "ρ pairs nontrivially with another node");
    match rd.extended_cartan() {
        Ok(ext) => {
            let mut a = vec![1i64];
            a.extend(&top);
            let null = (0..ext.len()).all(|j| (0..ext.len()).map(|i| a[i] * ext[i][j]).sum::<i64>() == 0);
            sink.push(s, format!("rootcore/{g}/affine-null-vector"), null, "(1, ρ) is not a null vector");
        }
        Err(e) => sink.push(s, format!("rootcore/{g}/affine-null-vector"), false, e.to_string()),
    }
    let closed = rd.labels().iter().all(|&l| rd.roots().iter().all(|r| rd.is_root(&rd.reflect(r, l).unwrap())));
    sink.push(s, format!("rootcore/{g}/reflection-closed"), closed, "a reflection leaves R");
    let long_roots = rd.roots().iter().filter(|r| rd.norm2(r) == max_norm).count();
    let orbit = rd.coset_orbit(&ParabolicSubset::new([ad.j0]), conicatlas::ORBIT_CAP).map(|o| o.len());
    sink.eq(s, format!("rootcore/{g}/contact-orbit-size"), orbit.ok(), Some(long_roots));
    let pss = reference::canonical_types(&pss_canonical(&component_types(&ad.pss)));
    sink.eq(s, format!("rootcore/{g}/pss-types"), pss, reference::canonical_types(&reference::pss_types(t)));
    sink.eq(s, format!("rootcore/{g}/contact-dim"), Some(ad.n), reference::n_value(t));
}

fn pss_canonical(types: &[CartanType]) -> Vec<String> {
    types.iter().map(ToString::to_string).collect()
}

fn restricted_pairing(rrd: &RestrictedDatum, i: usize, x: &[Q]) -> Q {
    let row: QVec = rrd.rd.cartan()[i].iter().map(|&c| q(c)).collect();
    qmath::dot(&row, x)
}

fn duality_ok(rrd: &RestrictedDatum, gammas: &[QVec]) -> bool {
    let m = rrd.rank();
    gammas.len() == m
        && gammas.iter().all(|g| g.len() == m)
        && (0..m).all(|i| (0..m).all(|j| restricted_pairing(rrd, i, &gammas[j]) == if i == j { Q::one() } else { Q::zero() }))
}

fn symdata_checks(sink: &mut Sink, t: CartanType, row: Row, rrd: &RestrictedDatum) {
    let s = Scope::Symdata;
    let g = t.to_string();
    let k: Vec<String> = rrd.k_types.iter().map(ToString::to_string).collect();
    sink.eq(s, format!("symdata/{g}/k-types"), reference::canonical_types(&k), reference::canonical_types(&reference::k_type_names(t)));
    sink.eq(s, format!("symdata/{g}/restricted-type"), rrd.satake.restricted_type.to_string(), reference::restricted_type(row).to_string());
    let assignment: Vec<(usize, usize)> = rrd.satake.restriction.iter().map(|(&a, &b)| (a, b)).collect();
    let mut want = reference::lambda_assignment(row);
    want.sort();
    sink.eq(s, format!("symdata/{g}/lambda-assignment"), assignment, want);
    sink.push(s, format!("symdata/{g}/gamma-duality"), duality_ok(rrd, &rrd.gammas), "<λ_i, γ_j> ≠ δ_ij");
    sink.eq(
        s,
        format!("symdata/{g}/gamma-closed-form"),
        rrd.gammas.clone(),
        reference::gamma_closed_form(reference::restricted_type(row)),
    );
    sink.eq(s, format!("symdata/{g}/color-count"), rrd.colors.len(), rrd.rank());
    let want = reference::color_rows(t);
    let kinds: Vec<(ColorType, i64)> = rrd.colors.iter().map(|c| (c.kind, c.a_d)).collect();
    sink.eq(s, format!("symdata/{g}/color-types"), kinds, want.iter().map(|c| (c.kind, c.a_d)).collect());
    let roots: Vec<Vec<i64>> = rrd.colors.iter().map(|c| c.spherical_root.clone()).collect();
    let want_roots: Vec<Vec<i64>> = want.iter().map(|c| c.spherical_root.clone()).collect();
    if row == Row::E8 {
        let a: BTreeSet<_> = roots.into_iter().collect();
        let b: BTreeSet<_> = want_roots.into_iter().collect();
        sink.eq(s, format!("symdata/{g}/spherical-roots"), a, b);
    } else {
        sink.eq(s, format!("symdata/{g}/spherical-roots"), roots, want_roots);
    }
    let r = t.rank as i64;
    let formula = match row {
        Row::BHigh if r >= 5 => Some(2 * r - 7),
        Row::DHigh => Some(2 * (r - 4)),
        _ => None,
    };
    if let Some(f) = formula {
        sink.eq(s, format!("symdata/{g}/a-d4-formula"), rrd.colors[3].a_d, f);
    }
    let twisted: Vec<Vec<usize>> =
        conicatlas::twisted_color_parabolics(rrd).into_iter().map(|x| x.into_iter().collect()).collect();
    sink.eq(s, format!("symdata/{g}/twisted-parabolics"), twisted, reference::twisted_color_parabolics(row));
    let sd = &rrd.satake;
    let mut invol = true;
    let mut black_fixed = true;
    for &l in sd.rd.labels() {
        let a = qmath::qvec(&sd.rd.simple_root(l).unwrap());
        let once = symdata::sigma_on_characters(sd, &a);
        invol &= symdata::sigma_on_characters(sd, &once) == a;
        if sd.black.contains(&l) {
            black_fixed &= once == a;
        }
    }
    sink.push(s, format!("symdata/{g}/sigma-involution"), invol, "σ² ≠ 1");
    sink.push(s, format!("symdata/{g}/sigma-fixes-black"), black_fixed, "σ moves a black root");
}

fn cone(spec: &str, rrd: &RestrictedDatum) -> Option<ColoredCone> {
    conicatlas::cone_from_spec(spec, rrd).ok()
}

fn pointed(c: &QCone) -> bool {
    let ineqs: Vec<fm::Constraint> = c.rays_q().iter().map(|r| (qmath::neg(r), q(-1))).collect();
    c.rays().is_empty() || fm::feasible(c.ambient(), &[], &ineqs)
}

fn non_maximal_faces(fan: &ColoredFan) -> BTreeSet<QCone> {
    let max: Vec<&QCone> = fan.maximal().into_iter().map(|c| &c.cone).collect();
    fan.members.iter().filter(|c| c.dim() > 0 && !max.contains(&&c.cone)).map(|c| c.cone.clone()).collect()
}

fn roundtrip(fan: &ColoredFan, m: usize, space: &Space) -> bool {
    let text = export_fan_json(fan, None);
    let Ok(raw) = parse_fan_json(&text, Some(m)) else { return false };
    let Ok(cones) = raw.iter().map(|c| c.build(m)).collect::<Result<Vec<_>, _>>() else { return false };
    ColoredFan::from_maximal(&cones, space) == *fan
}

fn lunavust_checks(sink: &mut Sink, t: CartanType, e: &ConicAtlasEntry) {
    let s = Scope::Lunavust;
    let g = t.to_string();
    let (rrd, space) = (&e.rrd, &e.space);
    let f = e.family;
    let chow_max: Vec<ColoredCone> = e.chow_fan.maximal().into_iter().cloned().collect();
    sink.eq(s, format!("lunavust/{g}/chow-cone"), Some(chow_max.clone()), cone(reference::chow_cone(f), rrd).map(|c| vec![c]));
    for (name, fan) in [("chow", &e.chow_fan), ("hilb", &e.hilb_fan)] {
        let ax = is_colored_fan(fan, space);
        sink.push(s, format!("lunavust/{g}/{name}-fan-axioms"), ax.is_ok(), ax.err().map(|d| d.to_string()).unwrap_or_default());
        sink.push(
            s,
            format!("lunavust/{g}/{name}-strictly-convex"),
            fan.members.iter().all(|c| pointed(&c.cone)),
            "a cone contains a line",
        );
        sink.push(s, format!("lunavust/{g}/{name}-complete"), is_complete(fan, space), "V is not covered");
        sink.push(s, format!("lunavust/{g}/{name}-json-roundtrip"), roundtrip(fan, rrd.rank(), space), "export/import changed the fan");
    }
    let hilb_max: BTreeSet<ColoredCone> = e.hilb_fan.maximal().into_iter().cloned().collect();
    let want: Option<BTreeSet<ColoredCone>> = reference::hilb_cones(f).iter().map(|x| cone(x, rrd)).collect();
    sink.eq(s, format!("lunavust/{g}/hilb-cones"), Some(hilb_max.clone()), want);
    let exceptional = matches!(t.series, Series::E | Series::F | Series::G);
    sink.eq(s, format!("lunavust/{g}/hilb-simple-iff-exceptional"), hilb_max.len() == 1, exceptional);
    for (name, fan, hilb) in [("chow", &e.chow_fan, false), ("hilb", &e.hilb_fan, true)] {
        let want: Option<BTreeSet<QCone>> =
            reference::face_list(f, hilb).iter().map(|x| cone(x, rrd).map(|c| c.cone)).collect();
        sink.eq(s, format!("lunavust/{g}/faces-{name}"), Some(non_maximal_faces(fan)), want);
    }
    let (nc, nh) = reference::orbit_counts(f);
    sink.eq(s, format!("lunavust/{g}/orbit-count-chow"), e.chow_fan.members.len(), nc);
    sink.eq(s, format!("lunavust/{g}/orbit-count-hilb"), e.hilb_fan.members.len(), nh);
    sink.eq(s, format!("lunavust/{g}/hilb-equals-chow-iff-g2"), e.hilb_fan == e.chow_fan, t.series == Series::G);
    for (k, c) in hilb_max.iter().enumerate() {
        let r = ruzzi_smooth(c, space);
        sink.push(s, format!("lunavust/{g}/ruzzi-hilb-{}", k + 1), r.smooth, r.detail);
    }
    for c in &chow_max {
        let r = ruzzi_smooth(c, space);
        sink.eq(s, format!("lunavust/{g}/ruzzi-chow"), r.smooth, t.series == Series::G);
    }
}

fn family_checks(sink: &mut Sink) {
    if !sink.wants(Scope::Lunavust) {
        return;
    }
    for f in FanFamily::ALL {
        let t = family_representative(f);
        let rrd = symdata::restricted_of(t).expect("supported");
        let space = Space::of(&rrd);
        for (k, fx) in reference::ruzzi_fixtures(f).iter().enumerate() {
            let name = format!("lunavust/{}/ruzzi-fixture-{}", f.name(), k + 1);
            let parse = |v: &[String]| -> Option<Vec<QVec>> { v.iter().map(|x| notation::parse_vector(x)).collect() };
            match (cone(&fx.cone, &rrd), parse(&fx.basis), parse(&fx.duals)) {
                (Some(cc), Some(b), Some(y)) => {
                    let r = ruzzi_with_basis(&cc, &space, &b, &y);
                    sink.push(Scope::Lunavust, name, r.condition2 && r.condition3, r.detail);
                }
                _ => sink.push(Scope::Lunavust, name, false, "unparseable fixture"),
            }
        }
    }
}

fn family_representative(f: FanFamily) -> CartanType {
    match f {
        FanFamily::BD => "B4",
        FanFamily::B3 => "B3",
        FanFamily::D4 => "D4",
        FanFamily::EF => "F4",
        FanFamily::G2 => "G2",
    }
    .parse()
    .unwrap()
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

fn conicatlas_checks(sink: &mut Sink, t: CartanType, row: Row, e: &ConicAtlasEntry) {
    let s = Scope::Conicatlas;
    let g = t.to_string();
    let ad = &e.adjoint;
    let rrd = &e.rrd;
    let line = conicatlas::line_stabilizer(ad);
    sink.eq(s, format!("conicatlas/{g}/line-stabilizer"), line.clone(), reference::line_stabilizer(row));
    let planes: Vec<(usize, Vec<usize>, bool)> =
        e.planes.iter().map(|p| (p.beta, p.stabilizer.missing.iter().copied().collect(), p.in_z)).collect();
    sink.eq(s, format!("conicatlas/{g}/planes"), planes, reference::b_stable_planes(t));
    let by_roots: Vec<ParabolicSubset> =
        e.planes.iter().filter_map(|p| conicatlas::plane_stabilizer_by_roots(ad, p.beta).ok()).collect();
    sink.eq(
        s,
        format!("conicatlas/{g}/plane-stabilizer-by-roots"),
        by_roots,
        e.planes.iter().map(|p| p.stabilizer.clone()).collect(),
    );
    let twisted = conicatlas::twisted_color_parabolics(rrd);
    let chow_colors = cone(reference::chow_cone(e.family), rrd).map(|c| c.colors);
    sink.eq(
        s,
        format!("conicatlas/{g}/isotropy-chow"),
        conicatlas::solve_colors(&twisted, &reference::line_stabilizer(row)).ok(),
        chow_colors,
    );
    let solved: Option<Vec<BTreeSet<usize>>> =
        reference::hilb_isotropy(row).iter().map(|p| conicatlas::solve_colors(&twisted, p).ok()).collect();
    let want: Option<Vec<BTreeSet<usize>>> =
        reference::hilb_cones(e.family).iter().map(|x| cone(x, rrd).map(|c| c.colors)).collect();
    sink.eq(s, format!("conicatlas/{g}/isotropy-hilb"), solved.map(sorted), want.map(sorted));
    let iso: Vec<ParabolicSubset> = e.planes.iter().map(|p| line.intersect(&p.stabilizer)).collect();
    sink.eq(s, format!("conicatlas/{g}/hilb-isotropy"), sorted(iso), sorted(reference::hilb_isotropy(row)));
    let dc = conicatlas::double_coset_count(ad);
    sink.eq(s, format!("conicatlas/{g}/double-cosets"), dc.ok(), Some(reference::double_cosets(row)));
    let ray = conicatlas::reducible_divisor_ray(e).ok();
    let want = cone(reference::reducible_ray(e.family), rrd).map(|c| c.cone.rays()[0].clone());
    sink.eq::<Option<Vec<BigInt>>>(s, format!("conicatlas/{g}/reducible-ray"), ray, want);
    for (name, hilb) in [("chow", false), ("hilb", true)] {
        match conicatlas::orbit_report(e, hilb) {
            Ok(r) => {
                let got: Vec<(OrbitLabel, usize)> = r.counts.iter().map(|(&l, &n)| (l, n)).collect();
                sink.eq(s, format!("conicatlas/{g}/orbit-types-{name}"), got, sorted(reference::type_counts(e.family, hilb)));
                if hilb {
                    let got: Vec<(OrbitLabel, OrbitLabel, usize)> =
                        r.edge_labels().into_iter().map(|((a, b), n)| (a, b, n)).collect();
                    sink.eq(s, format!("conicatlas/{g}/hasse-hilb"), got, sorted(reference::hasse_edges(e.family)));
                }
            }
            Err(err) => sink.push(s, format!("conicatlas/{g}/orbit-types-{name}"), false, err.to_string()),
        }
    }
}

fn random_q(rng: &mut ChaCha8Rng) -> Q {
    qf(rng.gen_range(-20..=20), rng.gen_range(1..=20))
}

fn chevalley_checks(sink: &mut Sink, t: CartanType, ad: &AdjointData, opts: &Options) {
    let s = Scope::Chevalley;
    let g = t.to_string();
    let seed = type_seed(opts.seed, t);
    let sc = match StructureConstants::build(&ad.rd) {
        Ok(sc) => sc,
        Err(e) => {
            sink.push(s, format!("chevalley/{g}/structure-constants"), false, e.to_string());
            return;
        }
    };
    let rd = &ad.rd;
    let nr = rd.roots().len();
    let mut sym = true;
    let mut string = true;
    for a in 0..nr {
        for b in 0..nr {
            let n = sc.n(a, b);
            sym &= n == -sc.n(b, a) && n == -sc.n(rd.negate_index(a), rd.negate_index(b));
            let sum: Vec<i64> = rd.roots()[a].iter().zip(&rd.roots()[b]).map(|(x, y)| x + y).collect();
            if rd.is_root(&sum) {
                string &= n.abs() == sc.string_p(a, b) + 1;
            } else {
                string &= n == 0;
            }
        }
    }
    sink.push(s, format!("chevalley/{g}/antisymmetry"), sym, "N_{β,α} ≠ −N_{α,β} or N_{−α,−β} ≠ −N_{α,β}");
    sink.push(s, format!("chevalley/{g}/string-lengths"), string, "|N_{α,β}| ≠ p+1");
    let jac = if rd.rank() <= 4 { sc.jacobi_exhaustive() } else { sc.jacobi_sampled(opts.jacobi_samples, seed) };
    sink.push(s, format!("chevalley/{g}/jacobi"), jac.is_ok(), jac.err().map(|e| e.to_string()).unwrap_or_default());

    let er = sc.e(&ad.rho);
    let neg_rho: Vec<i64> = ad.rho.iter().map(|c| -c).collect();
    let fr = sc.e(&neg_rho);
    let h = sc.bracket(&er, &fr);
    let rho_idx = sc.root_of(&ad.rho).unwrap();
    sink.eq(s, format!("chevalley/{g}/rho-coroot"), h.h.clone(), qmath::qvec(sc.coroot(rho_idx)));
    sink.eq(s, format!("chevalley/{g}/ad-squared"), sc.ad_power(&fr, &er, 2), fr.scale(&q(-2)));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all_ext = true;
    let mut coef_ok = true;
    for _ in 0..opts.twistor_samples {
        let tt = random_q(&mut rng);
        let x = chevalley::twistor_conic_sample(&sc, ad, &tt);
        all_ext &= sc.is_extremal(&x).unwrap_or(false);
        coef_ok &= x.e.get(&sc.root_of(&neg_rho).unwrap()).cloned().unwrap_or_else(Q::zero) == -(&tt * &tt);
    }
    sink.push(s, format!("chevalley/{g}/twistor-extremal"), all_ext, "a twistor sample is not extremal");
    sink.push(s, format!("chevalley/{g}/twistor-coefficient"), coef_ok, "coefficient of e_{−ρ} is not −t²");
    sink.eq(s, format!("chevalley/{g}/extremal-e-rho"), sc.is_extremal(&er).ok(), Some(true));
    sink.eq(s, format!("chevalley/{g}/not-extremal-e-rho-plus-f-rho"), sc.is_extremal(&er.add(&fr)).ok(), Some(false));
    let max_norm = rd.roots().iter().map(|r| rd.norm2(r)).max().unwrap();
    let long_ok = rd.roots().iter().all(|r| sc.is_extremal(&sc.e(r)).ok() == Some(rd.norm2(r) == max_norm));
    sink.push(s, format!("chevalley/{g}/extremal-iff-long"), long_ok, "root vector extremality differs from length");
    let mut inv = true;
    for pos in 0..rd.rank() {
        for x in [&er, &er.add(&fr)] {
            match sc.reflection_automorphism(pos, x) {
                Ok(y) => inv &= sc.is_extremal(&y).ok() == sc.is_extremal(x).ok(),
                Err(_) => inv = false,
            }
        }
    }
    sink.push(s, format!("chevalley/{g}/extremal-weyl-invariant"), inv, "a reflection automorphism changes extremality");

    let idx = chevalley::contact_indices(&sc, ad);
    sink.eq(s, format!("chevalley/{g}/contact-dim"), idx.len(), 2 * ad.n);
    let report = chevalley::contact_implication_check(&sc, ad, 0, seed);
    let w0 = &report.witnesses[0];
    sink.push(s, format!("chevalley/{g}/line-witness"), w0.quadratic_zero && w0.cubic_zero, "e_{−α_j0} has nonzero cubic");
    let general = report.witnesses.get(1).map(|w| !w.cubic_zero);
    sink.eq(s, format!("chevalley/{g}/general-witness"), general, Some(true));
    sink.eq(s, format!("chevalley/{g}/easy-direction"), report.counts.easy_direction_failures, 0);
    let tau: Vec<Q> = (0..rd.rank()).map(|_| loop {
        let x = random_q(&mut rng);
        if !x.is_zero() {
            break x;
        }
    }).collect();
    let mut v = chevalley::LieElement::zero(rd.rank());
    for &a in &idx {
        v = v.add(&chevalley::LieElement::root_vector(rd.rank(), a, random_q(&mut rng)));
    }
    let lhs = chevalley::contact_cubic(&sc, ad, &sc.torus_act(&tau, &v));
    let rhs = chevalley::contact_cubic(&sc, ad, &v).map(|c| sc.torus_act(&tau, &c));
    let rho_char = sc.torus_act(&tau, &er).e[&rho_idx].clone();
    let scaling = matches!((&lhs, &rhs), (Ok(l), Ok(r)) if *l == r.scale(&rho_char.recip()));
    sink.push(s, format!("chevalley/{g}/torus-scaling"), scaling, "cubic does not commute with the torus action");
    if t.series == Series::G {
        let r = chevalley::contact_implication_check(&sc, ad, opts.g2_samples, seed);
        sink.push(
            s,
            format!("chevalley/{g}/implication"),
            r.counts.violations == 0,
            format!("{} elements with vanishing cubic and nonvanishing quadratic", r.counts.violations),
        );
    }
    if t == "B3".parse().unwrap() {
        let r = chevalley::contact_implication_check(&sc, ad, 0, seed);
        sink.push(s, format!("chevalley/{g}/non-planar-witness"), r.counts.violations > 0, "no cubic-zero, quadratic-nonzero element found");
    }
}

pub const GOLDEN_FILES: [&str; 10] =
    ["satake", "gammas", "chow", "hilb", "planes", "cosets", "colors", "faces", "hasse", "orbitcounts"];

pub fn golden_scope(file: &str) -> Scope {
    match file {
        "satake" | "gammas" | "colors" => Scope::Symdata,
        "chow" | "hilb" | "faces" | "orbitcounts" => Scope::Lunavust,
        _ => Scope::Conicatlas,
    }
}

fn set_json(s: &BTreeSet<usize>) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

fn satake_value(rrd: &RestrictedDatum) -> Value {
    let sd = &rrd.satake;
    json!({
        "k": format_types(&rrd.k_types),
        "black": set_json(&sd.black),
        "arrows": sd.arrows,
        "restricted": sd.restricted_type.to_string(),
        "restriction": sd.restriction.iter().map(|(a, b)| (a.to_string(), json!(b))).collect::<serde_json::Map<_, _>>(),
    })
}

fn colors_value(rrd: &RestrictedDatum) -> Value {
    json!(rrd
        .colors
        .iter()
        .map(|c| json!({
            "color": c.index,
            "stabilizer": set_json(&c.stabilizer.missing),
            "spherical_root": c.spherical_root,
            "type": c.kind,
            "a_d": c.a_d,
        }))
        .collect::<Vec<_>>())
}

fn cone_value(c: &ColoredCone, rrd: &RestrictedDatum) -> Value {
    let mut rays: Vec<String> = c.cone.rays().iter().map(|r| conicatlas::ray_notation(r, rrd)).collect();
    rays.sort();
    json!({ "rays": rays, "colors": set_json(&c.colors) })
}

fn entry_golden(e: &ConicAtlasEntry) -> Result<BTreeMap<String, Value>, String> {
    let rrd = &e.rrd;
    let mut m = BTreeMap::new();
    let chow = e.chow_fan.maximal();
    m.insert("chow".into(), cone_value(chow[0], rrd));
    m.insert("hilb".into(), json!(e.hilb_fan.maximal().iter().map(|c| cone_value(c, rrd)).collect::<Vec<_>>()));
    m.insert(
        "planes".into(),
        json!(e
            .planes
            .iter()
            .map(|p| json!({"beta": p.beta, "long": p.long, "stabilizer": set_json(&p.stabilizer.missing), "in_z": p.in_z}))
            .collect::<Vec<_>>()),
    );
    m.insert("cosets".into(), json!(conicatlas::double_coset_count(&e.adjoint).map_err(|x| x.to_string())?));
    let faces = |f: &ColoredFan| -> Vec<String> {
        let max = f.maximal();
        let mut v: Vec<String> = f
            .members
            .iter()
            .filter(|c| c.dim() > 0 && !max.contains(c))
            .map(|c| conicatlas::cone_notation(c, rrd))
            .collect();
        v.sort();
        v
    };
    m.insert("faces".into(), json!({ "chow": faces(&e.chow_fan), "hilb": faces(&e.hilb_fan) }));
    let chow = conicatlas::orbit_report(e, false).map_err(|x| x.to_string())?;
    let hilb = conicatlas::orbit_report(e, true).map_err(|x| x.to_string())?;
    let edges = |r: &conicatlas::OrbitReport| -> Vec<Value> {
        r.edge_labels().into_iter().map(|((a, b), n)| json!([a.name(), b.name(), n])).collect()
    };
    m.insert("hasse".into(), json!({ "chow": edges(&chow), "hilb": edges(&hilb) }));
    let counts = |r: &conicatlas::OrbitReport| -> BTreeMap<String, usize> {
        r.counts.iter().map(|(l, n)| (l.name().to_string(), *n)).collect()
    };
    m.insert(
        "orbitcounts".into(),
        json!({ "chow": chow.nodes.len(), "hilb": hilb.nodes.len(), "chow_types": counts(&chow), "hilb_types": counts(&hilb) }),
    );
    Ok(m)
}

fn gamma_strings(g: &[QVec]) -> Vec<String> {
    g.iter().map(|v| v.iter().map(qmath::fmt_q).collect::<Vec<_>>().join(" ")).collect()
}

fn add_family_golden(golden: &mut BTreeMap<String, BTreeMap<String, Value>>) {
    let mut m = BTreeMap::new();
    for f in FanFamily::ALL {
        let rrd = symdata::restricted_of(family_representative(f)).expect("supported");
        m.insert(rrd.satake.restricted_type.to_string(), json!(gamma_strings(&rrd.gammas)));
    }
    golden.insert("gammas".into(), m);
}

fn golden_file(file: &str, entries: &BTreeMap<String, Value>) -> Value {
    let wrapped: serde_json::Map<String, Value> = entries
        .iter()
        .map(|(k, v)| (k.clone(), json!({ "source": format!("{file}/{k}"), "value": v })))
        .collect();
    json!({ "file": file, "entries": wrapped })
}

pub fn canonical_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

/// Canonical text of every golden file at the given rank cap.
pub fn golden_bundle(max_rank: usize) -> BTreeMap<String, String> {
    let opts = Options { max_rank, golden_dir: Some(PathBuf::new()), ..Options::default() };
    let types = sweep_types(max_rank);
    let scopes = [Scope::Symdata, Scope::Lunavust, Scope::Conicatlas];
    let per: Vec<BTreeMap<String, Value>> = types.par_iter().map(|&t| check_type(t, &scopes, &opts).1).collect();
    let mut golden: BTreeMap<String, BTreeMap<String, Value>> = BTreeMap::new();
    for (t, g) in types.iter().zip(per) {
        for (file, v) in g {
            golden.entry(file).or_default().insert(t.to_string(), v);
        }
    }
    add_family_golden(&mut golden);
    golden.iter().map(|(f, e)| (format!("{f}.json"), canonical_json(&golden_file(f, e)))).collect()
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct GoldenEntry {
    pub source: String,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct GoldenFile {
    pub file: String,
    pub entries: BTreeMap<String, GoldenEntry>,
}

/// Parses one golden file, requiring a known file name and `file/key` sources.
pub fn parse_golden(text: &str) -> Result<GoldenFile, String> {
    let g: GoldenFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if !GOLDEN_FILES.contains(&g.file.as_str()) {
        return Err(format!("unknown golden file {:?}", g.file));
    }
    if let Some((k, _)) = g.entries.iter().find(|(k, e)| e.source != format!("{}/{k}", g.file)) {
        return Err(format!("entry {k:?} has a mismatched source"));
    }
    Ok(g)
}

fn golden_checks(sink: &mut Sink, dir: &Path, computed: &BTreeMap<String, BTreeMap<String, Value>>) {
    for file in GOLDEN_FILES {
        let scope = golden_scope(file);
        if !sink.wants(scope) {
            continue;
        }
        let path = dir.join(format!("{file}.json"));
        let parsed = std::fs::read_to_string(&path)
            .map_err(|e| format!("{}: {e}", path.display()))
            .and_then(|s| parse_golden(&s))
            .and_then(|g| if g.file == file { Ok(g) } else { Err(format!("{} holds {:?}", path.display(), g.file)) });
        let golden = match parsed {
            Ok(v) => v,
            Err(e) => {
                sink.push(scope, format!("golden/{file}"), false, e);
                continue;
            }
        };
        let Some(entries) = computed.get(file) else { continue };
        for (key, want) in entries {
            let got = golden.entries.get(key).map(|e| &e.value);
            let name = format!("golden/{file}/{key}");
            match got {
                Some(g) => sink.push(scope, name, g == want, format!("golden {g} differs from computed {want}")),
                None => sink.push(scope, name, false, "missing from the golden file"),
            }
            if file == "gammas" {
                gamma_golden_check(sink, key, got);
            }
        }
    }
}

fn gamma_golden_check(sink: &mut Sink, key: &str, golden: Option<&Value>) {
    let name = format!("gamma-duality/golden/{key}");
    let rrd = ["B4", "B3", "D4", "F4", "G2"]
        .iter()
        .map(|t| symdata::restricted_of(t.parse().unwrap()).unwrap())
        .find(|r| r.satake.restricted_type.to_string() == key);
    let parsed: Option<Vec<QVec>> = golden
        .and_then(Value::as_array)
        .and_then(|a| a.iter().map(|s| s.as_str().and_then(notation::parse_vector)).collect());
    match (rrd, parsed) {
        (Some(r), Some(g)) => sink.push(Scope::Symdata, name, duality_ok(&r, &g), "golden γ are not dual to the λ_i"),
        _ => sink.push(Scope::Symdata, name, false, "unreadable golden γ"),
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scope::ALL.iter().find(|x| x.name() == s).copied().ok_or_else(|| format!("unknown scope {s:?}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let opts = Options { max_rank: 4, g2_samples: 200, jacobi_samples: 1000, ..Options::default() };
        let r = run(&[Scope::Rootcore, Scope::Symdata], &opts);
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn parse_scopes() {
        assert_eq!(Scope::parse_list("all").unwrap().len(), 5);
        assert_eq!(Scope::parse_list("chevalley"), Some(vec![Scope::Chevalley]));
        assert!(Scope::parse_list("nope").is_none());
    }
}
