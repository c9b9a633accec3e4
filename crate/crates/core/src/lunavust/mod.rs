//! Colored cones and colored fans of a spherical homogeneous space, checked
//! against the Luna–Vust axioms with exact arithmetic.
//!
//! The ambient space is `Q ⊗ coroot lattice of R'_O`, in `λ∨` coordinates. The
//! valuation cone is `V = {x : <λ_i, x> ≤ 0}` and color `D_i` maps to `λ_i∨/2`.

mod cone;
pub mod fm;
mod io;
mod ruzzi;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cone::{QCone, MAX_GENERATORS};
pub use io::{export_fan_json, parse_fan_json, FanJson, RawCone};
pub use ruzzi::{ruzzi_smooth, ruzzi_with_basis, RuzziReport};

use crate::qmath::{self, q, Q, QVec};
use crate::rootcore::RootDatum;
use crate::symdata::RestrictedDatum;
use fm::Constraint;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FanError {
    #[error("generators must have {expected} coordinates")]
    Dimension { expected: usize },
    #[error("cone is not pointed")]
    NotPointed,
    #[error("too many generators")]
    TooLarge,
    #[error("unknown color D{0}")]
    UnknownColor(usize),
    #[error("malformed fan JSON: {0}")]
    Json(String),
}

/// Why a colored cone or fan fails the axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    UnknownColor(usize),
    ColorOutsideCone(usize),
    RayNotGenerated(Vec<BigInt>),
    RelintMissesV,
    MissingFace(String),
    OverlapInV(String, String),
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::UnknownColor(i) => write!(f, "color D{i} does not exist"),
            Diagnostic::ColorOutsideCone(i) => write!(f, "ε(D{i}) is not in the cone"),
            Diagnostic::RayNotGenerated(r) => write!(f, "ray {r:?} is neither in V nor the image of a color"),
            Diagnostic::RelintMissesV => write!(f, "relative interior misses V"),
            Diagnostic::MissingFace(s) => write!(f, "colored face {s} is missing from the fan"),
            Diagnostic::OverlapInV(a, b) => write!(f, "relative interiors of {a} and {b} meet inside V"),
        }
    }
}

/// The space `E` with its valuation cone and color map.
#[derive(Debug, Clone)]
pub struct Space {
    /// Restricted root datum `R'_O`.
    pub rd: RootDatum,
}

impl Space {
    pub fn new(rd: RootDatum) -> Self {
        Space { rd }
    }

    pub fn of(rrd: &RestrictedDatum) -> Self {
        Space { rd: rrd.rd.clone() }
    }

    pub fn m(&self) -> usize {
        self.rd.rank()
    }

    /// `λ_i` as a functional on `λ∨` coordinates.
    pub fn lambda(&self, i: usize) -> QVec {
        self.rd.cartan()[i - 1].iter().map(|&c| q(c)).collect()
    }

    pub fn color_point(&self, i: usize) -> QVec {
        let mut v = vec![Q::from_integer(0.into()); self.m()];
        v[i - 1] = qmath::qf(1, 2);
        v
    }

    fn v_constraints(&self) -> Vec<Constraint> {
        (1..=self.m()).map(|i| (self.lambda(i), q(0))).collect()
    }

    pub fn in_v(&self, x: &[Q]) -> bool {
        (1..=self.m()).all(|i| qmath::dot(&self.lambda(i), x) <= q(0))
    }

    /// `relint(C) ∩ V ≠ ∅`.
    pub fn relint_meets_v(&self, c: &QCone) -> bool {
        let (eqs, mut ineqs) = c.relint_constraints();
        ineqs.extend(self.v_constraints());
        fm::feasible(self.m(), &eqs, &ineqs)
    }

    /// `relint(C1) ∩ relint(C2) ∩ V ≠ ∅`.
    pub fn relints_meet_in_v(&self, a: &QCone, b: &QCone) -> bool {
        let (mut eqs, mut ineqs) = a.relint_constraints();
        let (e2, i2) = b.relint_constraints();
        eqs.extend(e2);
        ineqs.extend(i2);
        ineqs.extend(self.v_constraints());
        fm::feasible(self.m(), &eqs, &ineqs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredCone {
    pub cone: QCone,
    pub colors: BTreeSet<usize>,
}

impl ColoredCone {
    pub fn new(ambient: usize, gens: &[QVec], colors: impl IntoIterator<Item = usize>) -> Result<Self, FanError> {
        Ok(ColoredCone { cone: QCone::new(ambient, gens)?, colors: colors.into_iter().collect() })
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    /// Short text form: rays as integer tuples and colors.
    pub fn describe(&self) -> String {
        let rays: Vec<String> = self
            .cone
            .rays()
            .iter()
            .map(|r| format!("({})", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        let cols: Vec<String> = self.colors.iter().map(|c| format!("D{c}")).collect();
        format!("<{}> {{{}}}", rays.join(" "), cols.join(","))
    }
}

/// Luna–Vust colored cone axioms.
pub fn is_colored_cone(cc: &ColoredCone, space: &Space) -> Result<(), Diagnostic> {
    let m = space.m();
    for &i in &cc.colors {
        if i == 0 || i > m {
            return Err(Diagnostic::UnknownColor(i));
        }
        if !cc.cone.contains(&space.color_point(i)) {
            return Err(Diagnostic::ColorOutsideCone(i));
        }
    }
    let color_rays: Vec<Vec<BigInt>> = cc.colors.iter().map(|&i| qmath::primitive(&space.color_point(i))).collect();
    for r in cc.cone.rays() {
        if !space.in_v(&qmath::int_to_q(r)) && !color_rays.contains(r) {
            return Err(Diagnostic::RayNotGenerated(r.clone()));
        }
    }
    if !space.relint_meets_v(&cc.cone) {
        return Err(Diagnostic::RelintMissesV);
    }
    Ok(())
}

/// Faces `C0` with `relint(C0) ∩ V ≠ ∅`, colored by `F ∩ ε⁻¹(C0)`.
pub fn colored_faces(cc: &ColoredCone, space: &Space) -> Vec<ColoredCone> {
    let mut out: Vec<ColoredCone> = cc
        .cone
        .faces()
        .into_iter()
        .filter(|f| space.relint_meets_v(f))
        .map(|f| {
            let colors = cc.colors.iter().copied().filter(|&i| f.contains(&space.color_point(i))).collect();
            ColoredCone { cone: f, colors }
        })
        .collect();
    out.sort();
    out
}

/// A colored fan, stored as the full set of its colored cones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredFan {
    pub members: BTreeSet<ColoredCone>,
}

impl ColoredFan {
    /// All colored faces of the given cones.
    pub fn from_maximal(cones: &[ColoredCone], space: &Space) -> ColoredFan {
        let members = cones.iter().flat_map(|c| colored_faces(c, space)).collect();
        ColoredFan { members }
    }

    pub fn maximal(&self) -> Vec<&ColoredCone> {
        self.members
            .iter()
            .filter(|a| !self.members.iter().any(|b| b != *a && a.cone != b.cone && a.cone.is_face_of(&b.cone)))
            .collect()
    }

    /// Rays of one-dimensional uncolored members: the `G`-stable divisors.
    pub fn g_stable_rays(&self) -> Vec<Vec<BigInt>> {
        self.members.iter().filter(|c| c.dim() == 1 && c.colors.is_empty()).map(|c| c.cone.rays()[0].clone()).collect()
    }

    pub fn levels(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for c in &self.members {
            *m.entry(c.dim()).or_insert(0) += 1;
        }
        m
    }
}

pub fn is_colored_fan(fan: &ColoredFan, space: &Space) -> Result<(), Diagnostic> {
    for c in &fan.members {
        is_colored_cone(c, space)?;
        for f in colored_faces(c, space) {
            if !fan.members.contains(&f) {
                return Err(Diagnostic::MissingFace(f.describe()));
            }
        }
    }
    let v: Vec<&ColoredCone> = fan.members.iter().collect();
    for (i, a) in v.iter().enumerate() {
        for b in &v[i + 1..] {
            if space.relints_meet_in_v(&a.cone, &b.cone) {
                return Err(Diagnostic::OverlapInV(a.describe(), b.describe()));
            }
        }
    }
    Ok(())
}

/// `V ⊆ ∪ C`, decided by subtracting full-dimensional cones from the interior of `V`.
pub fn is_complete(fan: &ColoredFan, space: &Space) -> bool {
    let m = space.m();
    let start: Vec<Constraint> = (1..=m).map(|i| (space.lambda(i), q(-1))).collect();
    let mut regions = vec![start];
    for c in fan.members.iter().filter(|c| c.cone.is_full()) {
        let mut next = Vec::new();
        for r in &regions {
            for n in c.cone.facet_normals() {
                let mut r2 = r.clone();
                r2.push((n, q(-1)));
                if fm::feasible(m, &[], &r2) {
                    next.push(r2);
                }
            }
        }
        regions = next;
        if regions.is_empty() {
            return true;
        }
    }
    regions.is_empty()
}

/// `G`-orbits of the embedding ordered by inclusion of closures.
#[derive(Debug, Clone)]
pub struct OrbitPoset {
    pub nodes: Vec<ColoredCone>,
    /// `(upper, lower)`: the orbit `lower` lies in the closure of `upper`,
    /// i.e. the cone of `upper` is a facet-level face of the cone of `lower`.
    pub edges: Vec<(usize, usize)>,
}

pub fn orbit_poset(fan: &ColoredFan, space: &Space) -> OrbitPoset {
    let nodes: Vec<ColoredCone> = fan.members.iter().cloned().collect();
    let faces: Vec<BTreeSet<usize>> = nodes
        .iter()
        .map(|n| {
            colored_faces(n, space).iter().filter_map(|f| nodes.iter().position(|x| x == f)).collect()
        })
        .collect();
    let mut edges = Vec::new();
    for (j, fj) in faces.iter().enumerate() {
        for &i in fj {
            if i == j {
                continue;
            }
            let between = fj.iter().any(|&k| k != i && k != j && faces[k].contains(&i));
            if !between {
                edges.push((i, j));
            }
        }
    }
    edges.sort();
    OrbitPoset { nodes, edges }
}

impl OrbitPoset {
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let mut s = String::from("digraph orbits {\n  rankdir=TB;\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let mut l = format!("dim {} {}", n.dim(), n.describe());
            if let Some(ls) = labels {
                l = format!("{} {}", ls[i], l);
            }
            s.push_str(&format!("  n{i} [label=\"{}\"];\n", l.replace('"', "'")));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// A prime divisor of the embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Divisor {
    GStable(Vec<BigInt>),
    Color(usize),
}
