//! Per-type pipeline for the spaces of conics on the adjoint variety `Z_g`:
//! contact data, `B`-stable lines and planes, isotropy equations, the Chow and
//! Hilbert fans, labeled orbit posets and double coset counts.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::lunavust::{
    export_fan_json, is_colored_fan, is_complete, orbit_poset, ColoredCone, ColoredFan, FanError, QCone, Space,
};
use crate::notation::{self, NotationError};
use crate::qmath::{self, q, qvec, Q};
use crate::reference::{self, OrbitLabel};
use crate::rootcore::{build_root_datum, format_types, CartanType, ParabolicSubset, RootDatum, RootError};
use crate::symdata::{self, FanFamily, RestrictedDatum, Row, SymError};

pub const DEFAULT_MAX_RANK: usize = 8;

/// Upper bound on coset orbit sizes during double coset counts.
pub const ORBIT_CAP: usize = 1 << 21;

#[derive(Debug, Error)]
pub enum AtlasError {
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Notation(#[from] NotationError),
    #[error("isotropy equation has no solution: {0}")]
    Contradiction(String),
    #[error("orbit labels disagree with the fan: {0}")]
    Label(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("unknown table {0:?}")]
    UnknownTable(String),
}

/// Contact data of `Z_g ⊂ P(g)`.
#[derive(Debug, Clone)]
pub struct AdjointData {
    pub g: CartanType,
    pub rd: RootDatum,
    pub rho: Vec<i64>,
    pub j0: usize,
    /// `dim Z_g = 2n + 1`.
    pub n: usize,
    pub neighbors: BTreeSet<usize>,
    /// Semisimple part of the isotropy group of `o = [E_ρ]`.
    pub pss: RootDatum,
    /// Stabilizer in `P^ss` of a line through `o`.
    pub q: ParabolicSubset,
}

impl AdjointData {
    /// `m_{j0}(α) = <α | ρ>`.
    pub fn grade(&self, alpha: &[i64]) -> i64 {
        let r = qvec(&self.rho);
        let x = q(2) * self.rd.inner(&qvec(alpha), &r) / self.rd.inner(&r, &r);
        qmath::to_i64(&x).expect("integral pairing")
    }

    /// Roots spanning the contact hyperplane `D_o`.
    pub fn contact_roots(&self) -> Vec<Vec<i64>> {
        self.rd.roots().iter().filter(|a| self.grade(a) == -1).cloned().collect()
    }
}

pub fn adjoint_data(t: CartanType) -> Result<AdjointData, AtlasError> {
    Row::of(t)?;
    let rd = build_root_datum(t);
    let rho = rd.highest_root()?;
    let j0 = symdata::contact_node(&rd)?;
    let neighbors = rd.neighbors(j0)?;
    let rest: Vec<usize> = rd.labels().iter().copied().filter(|&l| l != j0).collect();
    let pss = rd.subdatum(&rest)?;
    let mut ad = AdjointData { g: t, rd, rho, j0, n: 0, q: ParabolicSubset::new(neighbors.iter().copied()), neighbors, pss };
    let dim_z = ad.rd.roots().iter().filter(|a| matches!(ad.grade(a), -1 | -2)).count();
    ad.n = (dim_z - 1) / 2;
    Ok(ad)
}

/// `Stab_G(L_B) = P_{N(α_{j0})}`.
pub fn line_stabilizer(ad: &AdjointData) -> ParabolicSubset {
    ParabolicSubset::new(ad.neighbors.iter().copied())
}

/// The plane `P(E_ρ, E_{ρ−α_{j0}}, E_{ρ−α_{j0}−β})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BStablePlane {
    pub beta: usize,
    pub long: bool,
    pub stabilizer: ParabolicSubset,
    pub in_z: bool,
}

pub fn b_stable_planes(ad: &AdjointData) -> Result<Vec<BStablePlane>, AtlasError> {
    let mut out = Vec::new();
    for &beta in &ad.neighbors {
        let long = ad.rd.is_long(beta)?;
        let mut i: BTreeSet<usize> = ad.neighbors.union(&ad.rd.neighbors(beta)?).copied().collect();
        i.remove(&ad.j0);
        if long {
            i.remove(&beta);
        }
        out.push(BStablePlane { beta, long, stabilizer: ParabolicSubset { missing: i }, in_z: long });
    }
    Ok(out)
}

/// The plane stabilizer read off root membership instead of the neighbor formula:
/// `γ` is missing when `ρ−α_{j0}−γ` is a root other than `ρ−α_{j0}−β`, or when
/// `ρ−α_{j0}−β−γ` is a root.
pub fn plane_stabilizer_by_roots(ad: &AdjointData, beta: usize) -> Result<ParabolicSubset, AtlasError> {
    let rd = &ad.rd;
    let sub = |v: &[i64], l: usize| -> Result<Vec<i64>, RootError> {
        let s = rd.simple_root(l)?;
        Ok(v.iter().zip(&s).map(|(a, b)| a - b).collect())
    };
    let top = sub(&ad.rho, ad.j0)?;
    let third = sub(&top, beta)?;
    let mut missing = BTreeSet::new();
    for &g in rd.labels() {
        let a = sub(&top, g)?;
        if (g != beta && rd.is_root(&a)) || rd.is_root(&sub(&third, g)?) {
            missing.insert(g);
        }
    }
    Ok(ParabolicSubset { missing })
}

/// `θ(I_i)` for each color, where `I_i` are the simple roots restricting to `λ_i`
/// and `θ = −w0`; `P_{θ(I_i)} = (w0 · P_{I_i} · w0⁻¹)⁻`.
pub fn twisted_color_parabolics(rrd: &RestrictedDatum) -> Vec<BTreeSet<usize>> {
    let sd = &rrd.satake;
    let theta = sd.rd.duality_involution();
    (1..=rrd.rank())
        .map(|i| sd.restriction.iter().filter(|(_, &v)| v == i).map(|(k, _)| theta[k]).collect())
        .collect()
}

/// Colors `F` of a simple embedding whose closed orbit has isotropy `target`:
/// `∪_{i∉F} θ(I_i) = target`.
pub fn solve_colors(twisted: &[BTreeSet<usize>], target: &ParabolicSubset) -> Result<BTreeSet<usize>, AtlasError> {
    let mut f = BTreeSet::new();
    let mut union = BTreeSet::new();
    for (k, s) in twisted.iter().enumerate() {
        if s.is_subset(&target.missing) {
            union.extend(s.iter().copied());
        } else {
            f.insert(k + 1);
        }
    }
    if union != target.missing {
        return Err(AtlasError::Contradiction(format!("no color set realizes {target}")));
    }
    Ok(f)
}

/// A colored cone from the compact notation of [`crate::notation`].
pub fn cone_from_spec(spec: &str, rrd: &RestrictedDatum) -> Result<ColoredCone, AtlasError> {
    let m = rrd.rank();
    if spec.trim().is_empty() {
        return Ok(ColoredCone { cone: QCone::zero(m), colors: BTreeSet::new() });
    }
    let cs = notation::parse_cone(spec)?;
    let gens = cs.generators(&rrd.gammas)?;
    Ok(ColoredCone::new(m, &gens, cs.colors.iter().copied())?)
}

/// Writes a primitive ray as `-g<j>` or `l<i>` when it is one of those, and as
/// a coordinate tuple otherwise.
pub fn ray_notation(ray: &[BigInt], rrd: &RestrictedDatum) -> String {
    for (j, g) in rrd.gammas.iter().enumerate() {
        if qmath::primitive(&qmath::neg(g)) == ray {
            return format!("-g{}", j + 1);
        }
    }
    for i in 1..=rrd.rank() {
        if qmath::primitive(&rrd.coroot(i)) == ray {
            return format!("l{i}");
        }
    }
    format!("({})", ray.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
}

pub fn cone_notation(cc: &ColoredCone, rrd: &RestrictedDatum) -> String {
    let mut terms: Vec<String> = cc.cone.rays().iter().map(|r| ray_notation(r, rrd)).collect();
    terms.sort_by_key(|t| (!t.starts_with('-'), t.clone()));
    let body = terms.join(",");
    if cc.colors.is_empty() {
        body
    } else {
        format!("{body} | {}", cc.colors.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
    }
}

/// Everything computed for one `g`.
#[derive(Debug, Clone)]
pub struct ConicAtlasEntry {
    pub adjoint: AdjointData,
    pub rrd: RestrictedDatum,
    pub row: Row,
    pub family: FanFamily,
    pub space: Space,
    pub planes: Vec<BStablePlane>,
    pub chow_colors: BTreeSet<usize>,
    pub chow_fan: ColoredFan,
    pub hilb_fan: ColoredFan,
}

pub fn build_entry(t: CartanType) -> Result<ConicAtlasEntry, AtlasError> {
    let adjoint = adjoint_data(t)?;
    let rrd = symdata::restricted_of(t)?;
    let row = Row::of(t)?;
    let family = FanFamily::of_row(row);
    let space = Space::of(&rrd);
    let planes = b_stable_planes(&adjoint)?;
    let (chow_fan, chow_colors) = build_chow_fan(&adjoint, &rrd, &space)?;
    let hilb_fan = build_hilb_fan(&adjoint, &rrd, &space, &planes)?;
    Ok(ConicAtlasEntry { adjoint, rrd, row, family, space, planes, chow_colors, chow_fan, hilb_fan })
}

/// The simple embedding whose closed orbit is `G/Stab_G(L_B)`: colors from the
/// isotropy equation, cone spanned by `−V`'s generators and the color images.
pub fn build_chow_fan(
    ad: &AdjointData,
    rrd: &RestrictedDatum,
    space: &Space,
) -> Result<(ColoredFan, BTreeSet<usize>), AtlasError> {
    let colors = solve_colors(&twisted_color_parabolics(rrd), &line_stabilizer(ad))?;
    let mut gens: Vec<Vec<Q>> = rrd.gammas.iter().map(|g| qmath::neg(g)).collect();
    gens.extend(colors.iter().map(|&i| rrd.color_point(i)));
    let cc = ColoredCone::new(rrd.rank(), &gens, colors.iter().copied())?;
    Ok((ColoredFan::from_maximal(&[cc], space), colors))
}

/// The Hilbert fan from its maximal cones, checked against the fan axioms,
/// completeness and the isotropy equations of its closed orbits.
pub fn build_hilb_fan(
    ad: &AdjointData,
    rrd: &RestrictedDatum,
    space: &Space,
    planes: &[BStablePlane],
) -> Result<ColoredFan, AtlasError> {
    let family = FanFamily::of_row(rrd.satake.row);
    let cones: Vec<ColoredCone> =
        reference::hilb_cones(family).iter().map(|s| cone_from_spec(s, rrd)).collect::<Result<_, _>>()?;
    let fan = ColoredFan::from_maximal(&cones, space);
    is_colored_fan(&fan, space).map_err(|d| AtlasError::InvalidFan(d.to_string()))?;
    if !is_complete(&fan, space) {
        return Err(AtlasError::InvalidFan("not complete".into()));
    }
    let twisted = twisted_color_parabolics(rrd);
    let line = line_stabilizer(ad);
    let mut expected: Vec<BTreeSet<usize>> = planes
        .iter()
        .map(|p| solve_colors(&twisted, &line.intersect(&p.stabilizer)))
        .collect::<Result<_, _>>()?;
    let mut got: Vec<BTreeSet<usize>> = fan.maximal().iter().map(|c| c.colors.clone()).collect();
    expected.sort();
    got.sort();
    if expected != got {
        return Err(AtlasError::Contradiction(format!("maximal cone colors {got:?} but closed orbits give {expected:?}")));
    }
    Ok(fan)
}

pub fn double_coset_count(ad: &AdjointData) -> Result<usize, AtlasError> {
    Ok(ad.pss.double_coset_count(&ad.q, ORBIT_CAP)?)
}

/// The `G`-stable ray of the Chow cone lying in exactly as many colored faces
/// as there are double cosets; this is the divisor of reducible conics.
pub fn reducible_divisor_ray(entry: &ConicAtlasEntry) -> Result<Vec<BigInt>, AtlasError> {
    let count = double_coset_count(&entry.adjoint)?;
    let fan = &entry.chow_fan;
    let hits: Vec<Vec<BigInt>> = fan
        .g_stable_rays()
        .into_iter()
        .filter(|r| fan.members.iter().filter(|c| c.cone.rays().contains(r)).count() == count)
        .collect();
    match hits.as_slice() {
        [r] => Ok(r.clone()),
        _ => Err(AtlasError::Label(format!("{} rays lie in {count} colored faces", hits.len()))),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitNode {
    pub dim: usize,
    pub cone: String,
    pub label: OrbitLabel,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    pub scheme: &'static str,
    pub nodes: Vec<OrbitNode>,
    /// `(upper, lower)`: `lower` lies in the closure of `upper`.
    pub edges: Vec<(usize, usize)>,
    pub counts: BTreeMap<OrbitLabel, usize>,
    #[serde(skip)]
    pub dot: String,
}

impl OrbitReport {
    pub fn edge_labels(&self) -> BTreeMap<(OrbitLabel, OrbitLabel), usize> {
        let mut m = BTreeMap::new();
        for &(a, b) in &self.edges {
            *m.entry((self.nodes[a].label, self.nodes[b].label)).or_insert(0) += 1;
        }
        m
    }
}

/// Orbits of the Chow (`hilb = false`) or Hilbert normalization with conic types.
pub fn orbit_report(entry: &ConicAtlasEntry, hilb: bool) -> Result<OrbitReport, AtlasError> {
    let fan = if hilb { &entry.hilb_fan } else { &entry.chow_fan };
    let poset = orbit_poset(fan, &entry.space);
    let mut table: Vec<(QCone, OrbitLabel)> = Vec::new();
    for (spec, label) in reference::hilb_labels(entry.family) {
        table.push((cone_from_spec(spec, &entry.rrd)?.cone, label));
    }
    let maximal: Vec<ColoredCone> = fan.maximal().into_iter().cloned().collect();
    let mut nodes = Vec::new();
    for n in &poset.nodes {
        let is_max = maximal.contains(n);
        let label = if !hilb && is_max {
            OrbitLabel::DL
        } else {
            table
                .iter()
                .find(|(c, _)| *c == n.cone)
                .map(|(_, l)| *l)
                .ok_or_else(|| AtlasError::Label(format!("no conic type for {}", cone_notation(n, &entry.rrd))))?
        };
        if (label == OrbitLabel::Twistor) != (n.dim() == 0) {
            return Err(AtlasError::Label("the open orbit must be the zero cone".into()));
        }
        if is_max && !label.is_double() {
            return Err(AtlasError::Label(format!("closed orbit mismatch at {}", cone_notation(n, &entry.rrd))));
        }
        nodes.push(OrbitNode { dim: n.dim(), cone: cone_notation(n, &entry.rrd), label });
    }
    let ray = reducible_divisor_ray(entry)?;
    for (n, node) in poset.nodes.iter().zip(&nodes) {
        if node.label.is_reducible() && !n.cone.rays().contains(&ray) {
            return Err(AtlasError::Label(format!("{} misses the reducible divisor", node.cone)));
        }
        if node.label == OrbitLabel::PR && !maximal.iter().any(|mx| n.cone.is_face_of(&mx.cone) && mx.dim() == n.dim() + 1) {
            return Err(AtlasError::Label(format!("{} is not of codimension one", node.cone)));
        }
    }
    let reducible = nodes.iter().filter(|n| n.label.is_reducible()).count();
    if reducible + 1 != double_coset_count(&entry.adjoint)? {
        return Err(AtlasError::Label(format!("{reducible} reducible orbits")));
    }
    let mut counts = BTreeMap::new();
    for n in &nodes {
        *counts.entry(n.label).or_insert(0) += 1;
    }
    let dot_labels: Vec<String> = nodes.iter().map(|n| n.label.name().to_string()).collect();
    let dot = poset.to_dot(Some(&dot_labels));
    Ok(OrbitReport { scheme: if hilb { "hilb" } else { "chow" }, nodes, edges: poset.edges, counts, dot })
}

/// `{ "g", "j0", "n", "chow", "hilb", "orbits", "double_cosets" }`.
pub fn entry_json(entry: &ConicAtlasEntry) -> Result<Value, AtlasError> {
    let restricted = entry.rrd.satake.restricted_type.to_string();
    let fan = |f: &ColoredFan| -> Value { serde_json::from_str(&export_fan_json(f, Some(&restricted))).expect("valid JSON") };
    Ok(json!({
        "g": entry.adjoint.g.to_string(),
        "j0": entry.adjoint.j0,
        "n": entry.adjoint.n,
        "chow": fan(&entry.chow_fan),
        "hilb": fan(&entry.hilb_fan),
        "orbits": {
            "chow": orbit_report(entry, false)?,
            "hilb": orbit_report(entry, true)?,
        },
        "double_cosets": double_coset_count(&entry.adjoint)?,
    }))
}

/// Row representatives in display order; the classical rows use the smallest
/// rank of their range.
pub fn row_types() -> Vec<CartanType> {
    Row::ALL.iter().map(|r| r.representative()).collect()
}

/// `(g, count)` for every row.
pub fn double_coset_table() -> Result<Vec<(CartanType, usize)>, AtlasError> {
    row_types().into_iter().map(|t| Ok((t, double_coset_count(&adjoint_data(t)?)?))).collect()
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Table {
    pub name: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub const TABLE_NAMES: [&str; 6] = ["satake", "chow", "hilb", "planes", "cosets", "colors"];

fn set_str(s: &BTreeSet<usize>) -> String {
    s.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn vec_str(v: &[i64]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// One of the reproduction tables for the given types.
pub fn table(name: &str, types: &[CartanType]) -> Result<Table, AtlasError> {
    let h = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let mut rows = Vec::new();
    let headers = match name {
        "satake" => {
            for &t in types {
                let rrd = symdata::restricted_of(t)?;
                let sd = &rrd.satake;
                let arrows: Vec<String> = sd.arrows.iter().map(|(a, b)| format!("{a}<->{b}")).collect();
                let lam: Vec<String> = (1..=rrd.rank())
                    .map(|i| {
                        let js: BTreeSet<usize> =
                            sd.restriction.iter().filter(|(_, &v)| v == i).map(|(&k, _)| k).collect();
                        format!("l{i}={}", set_str(&js))
                    })
                    .collect();
                rows.push(vec![
                    t.to_string(),
                    format_types(&rrd.k_types),
                    set_str(&sd.black),
                    arrows.join(" "),
                    sd.restricted_type.to_string(),
                    lam.join(" "),
                ]);
            }
            h(&["g", "k", "black", "arrows", "restricted", "restriction"])
        }
        "chow" | "hilb" => {
            for &t in types {
                let e = build_entry(t)?;
                let fan = if name == "chow" { &e.chow_fan } else { &e.hilb_fan };
                for cc in fan.maximal() {
                    let rays: Vec<String> = {
                        let mut r: Vec<String> = cc.cone.rays().iter().map(|r| ray_notation(r, &e.rrd)).collect();
                        r.sort_by_key(|t| (!t.starts_with('-'), t.clone()));
                        r
                    };
                    rows.push(vec![t.to_string(), rays.join(","), set_str(&cc.colors)]);
                }
            }
            h(&["g", "rays", "colors"])
        }
        "planes" => {
            for &t in types {
                let ad = adjoint_data(t)?;
                let line = line_stabilizer(&ad);
                for p in b_stable_planes(&ad)? {
                    rows.push(vec![
                        t.to_string(),
                        ad.j0.to_string(),
                        p.beta.to_string(),
                        p.long.to_string(),
                        p.stabilizer.to_string(),
                        p.in_z.to_string(),
                        line.intersect(&p.stabilizer).to_string(),
                    ]);
                }
            }
            h(&["g", "j0", "beta", "long", "stabilizer", "in_z", "isotropy"])
        }
        "cosets" => {
            for &t in types {
                let ad = adjoint_data(t)?;
                rows.push(vec![
                    t.to_string(),
                    format_types(&crate::rootcore::component_types(&ad.pss)),
                    ad.q.to_string(),
                    double_coset_count(&ad)?.to_string(),
                ]);
            }
            h(&["g", "pss", "q", "count"])
        }
        "colors" => {
            for &t in types {
                let rrd = symdata::restricted_of(t)?;
                for c in &rrd.colors {
                    rows.push(vec![
                        t.to_string(),
                        format!("D{}", c.index),
                        c.stabilizer.to_string(),
                        vec_str(&c.spherical_root),
                        c.kind.to_string(),
                        c.a_d.to_string(),
                    ]);
                }
            }
            h(&["g", "color", "stabilizer", "spherical_root", "type", "a_d"])
        }
        other => return Err(AtlasError::UnknownTable(other.to_string())),
    };
    Ok(Table { name: name.to_string(), headers, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    #[test]
    fn contact_data() {
        let f4 = adjoint_data(t("F4")).unwrap();
        assert_eq!((f4.j0, f4.n), (4, 7));
        let e8 = adjoint_data(t("E8")).unwrap();
        assert_eq!((e8.j0, e8.n), (1, 28));
        let b3 = adjoint_data(t("B3")).unwrap();
        assert_eq!((b3.j0, b3.n), (2, 3));
        assert!(adjoint_data(t("C3")).is_err());
    }

    #[test]
    fn planes_g2_b3() {
        let g2 = b_stable_planes(&adjoint_data(t("G2")).unwrap()).unwrap();
        assert_eq!(g2, vec![BStablePlane { beta: 1, long: false, stabilizer: ParabolicSubset::new([1]), in_z: false }]);
        let b3 = b_stable_planes(&adjoint_data(t("B3")).unwrap()).unwrap();
        assert_eq!(b3[0].stabilizer, ParabolicSubset::new([3]));
        assert_eq!(b3[1].stabilizer, ParabolicSubset::new([1, 3]));
        assert!(b3[0].in_z && !b3[1].in_z);
    }

    #[test]
    fn isotropy_equations() {
        let rrd = symdata::restricted_of(t("E6")).unwrap();
        let tw = twisted_color_parabolics(&rrd);
        assert_eq!(solve_colors(&tw, &ParabolicSubset::new([2, 3, 4])).unwrap(), BTreeSet::from([1, 4]));
        assert_eq!(solve_colors(&tw, &ParabolicSubset::new([3])).unwrap(), BTreeSet::from([1, 2, 4]));
        assert!(solve_colors(&tw, &ParabolicSubset::new([1])).is_err());
    }

    #[test]
    fn g2_orbits() {
        let e = build_entry(t("G2")).unwrap();
        let r = orbit_report(&e, true).unwrap();
        assert_eq!(r.nodes.len(), 3);
        assert_eq!(r.edges.len(), 2);
    }
}
