//! Satake diagrams of the symmetric subgroups `G^σ` for the adjoint `G`, the
//! restricted root system `R'_O`, colors and anticanonical coefficients.
//!
//! Vectors in the restricted space are written in coroot coordinates
//! `Σ c_i λ_i∨`; functionals are written in fundamental weights `π_i` of `R'_O`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lunavust::{ColoredFan, Divisor};
use crate::qmath::{self, q, qvec, Q, QVec};
use crate::rootcore::{build_root_datum, component_types, CartanType, ParabolicSubset, RootDatum, RootError, Series, WeylWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("no symmetric datum is tabulated for {0}")]
    UnsupportedType(String),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("inconsistent restricted data: {0}")]
    Inconsistent(String),
}

/// The ten row families of the adjoint classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Row {
    BHigh,
    B3,
    DHigh,
    D5,
    D4,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Row {
    pub const ALL: [Row; 10] =
        [Row::BHigh, Row::B3, Row::DHigh, Row::D5, Row::D4, Row::E6, Row::E7, Row::E8, Row::F4, Row::G2];

    pub fn of(t: CartanType) -> Result<Row, SymError> {
        Ok(match (t.series, t.rank) {
            (Series::B, 3) => Row::B3,
            (Series::B, r) if r >= 4 => Row::BHigh,
            (Series::D, 4) => Row::D4,
            (Series::D, 5) => Row::D5,
            (Series::D, r) if r >= 6 => Row::DHigh,
            (Series::E, 6) => Row::E6,
            (Series::E, 7) => Row::E7,
            (Series::E, 8) => Row::E8,
            (Series::F, 4) => Row::F4,
            (Series::G, 2) => Row::G2,
            _ => return Err(SymError::UnsupportedType(t.to_string())),
        })
    }

    /// A representative type for the row.
    pub fn representative(&self) -> CartanType {
        let s = match self {
            Row::BHigh => "B4",
            Row::B3 => "B3",
            Row::DHigh => "D6",
            Row::D5 => "D5",
            Row::D4 => "D4",
            Row::E6 => "E6",
            Row::E7 => "E7",
            Row::E8 => "E8",
            Row::F4 => "F4",
            Row::G2 => "G2",
        };
        s.parse().unwrap()
    }

    pub fn label(&self) -> &'static str {
        match self {
            Row::BHigh => "B_r (r>=4)",
            Row::B3 => "B_3",
            Row::DHigh => "D_r (r>=6)",
            Row::D5 => "D_5",
            Row::D4 => "D_4",
            Row::E6 => "E_6",
            Row::E7 => "E_7",
            Row::E8 => "E_8",
            Row::F4 => "F_4",
            Row::G2 => "G_2",
        }
    }
}

/// Rows sharing a restricted root system share their fans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FanFamily {
    /// `B_r` with `r ≥ 4` and `D_r` with `r ≥ 5`; restricted `B4`.
    BD,
    B3,
    D4,
    /// `E6, E7, E8, F4`; restricted `F4`.
    EF,
    G2,
}

impl FanFamily {
    pub fn of_row(row: Row) -> FanFamily {
        match row {
            Row::BHigh | Row::DHigh | Row::D5 => FanFamily::BD,
            Row::B3 => FanFamily::B3,
            Row::D4 => FanFamily::D4,
            Row::E6 | Row::E7 | Row::E8 | Row::F4 => FanFamily::EF,
            Row::G2 => FanFamily::G2,
        }
    }

    pub const ALL: [FanFamily; 5] = [FanFamily::BD, FanFamily::B3, FanFamily::D4, FanFamily::EF, FanFamily::G2];

    pub fn name(&self) -> &'static str {
        match self {
            FanFamily::BD => "BD",
            FanFamily::B3 => "B3",
            FanFamily::D4 => "D4",
            FanFamily::EF => "EF",
            FanFamily::G2 => "G2",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SatakeDiagram {
    pub g: CartanType,
    pub row: Row,
    pub rd: RootDatum,
    pub black: BTreeSet<usize>,
    pub arrows: Vec<(usize, usize)>,
    /// White node label to restricted simple root index (1-based).
    pub restriction: BTreeMap<usize, usize>,
    pub restricted_type: CartanType,
}

impl SatakeDiagram {
    pub fn white(&self) -> Vec<usize> {
        self.rd.labels().iter().copied().filter(|l| !self.black.contains(l)).collect()
    }

    /// The diagram involution `ε`; on black nodes it is the opposition
    /// involution of the black subsystem, so that `σ` fixes black roots.
    fn arrow_image(&self, l: usize) -> usize {
        if self.black.contains(&l) {
            let labels: Vec<usize> = self.black.iter().copied().collect();
            let sub = self.rd.subdatum(&labels).expect("black nodes form a sub-diagram");
            return sub.duality_involution()[&l];
        }
        for &(a, b) in &self.arrows {
            if a == l {
                return b;
            }
            if b == l {
                return a;
            }
        }
        l
    }

    /// Longest element of the black subsystem.
    pub fn w_black(&self) -> WeylWord {
        if self.black.is_empty() {
            return WeylWord(vec![]);
        }
        let labels: Vec<usize> = self.black.iter().copied().collect();
        self.rd.subdatum(&labels).expect("black nodes form a sub-diagram").longest_element()
    }
}

pub fn satake_of(t: CartanType) -> Result<SatakeDiagram, SymError> {
    let row = Row::of(t)?;
    let r = t.rank;
    let ident = |n: usize| (1..=n).map(|j| (j, j)).collect::<BTreeMap<_, _>>();
    let ty = |s: &str| s.parse::<CartanType>().unwrap();
    let (black, arrows, restriction, rt): (BTreeSet<usize>, Vec<(usize, usize)>, BTreeMap<usize, usize>, CartanType) =
        match row {
            Row::BHigh | Row::DHigh => ((5..=r).collect(), vec![], ident(4), ty("B4")),
            Row::B3 => (BTreeSet::new(), vec![], ident(3), ty("B3")),
            Row::D5 => {
                let mut m = ident(4);
                m.insert(5, 4);
                (BTreeSet::new(), vec![(4, 5)], m, ty("B4"))
            }
            Row::D4 => (BTreeSet::new(), vec![], ident(4), ty("D4")),
            Row::E6 => (
                BTreeSet::new(),
                vec![(1, 5), (2, 4)],
                [(1, 1), (5, 1), (2, 2), (4, 2), (3, 3), (6, 4)].into_iter().collect(),
                ty("F4"),
            ),
            Row::E7 => ([1, 3, 7].into(), vec![], [(2, 1), (4, 2), (5, 3), (6, 4)].into_iter().collect(), ty("F4")),
            Row::E8 => ([4, 5, 6, 8].into(), vec![], [(7, 1), (3, 2), (2, 3), (1, 4)].into_iter().collect(), ty("F4")),
            Row::F4 => (BTreeSet::new(), vec![], ident(4), ty("F4")),
            Row::G2 => (BTreeSet::new(), vec![], ident(2), ty("G2")),
        };
    Ok(SatakeDiagram { g: t, row, rd: build_root_datum(t), black, arrows, restriction, restricted_type: rt })
}

/// `σ = −w_X ∘ ε` on characters of the maximal torus, in root coordinates.
pub fn sigma_on_characters(sd: &SatakeDiagram, v: &[Q]) -> QVec {
    let rd = &sd.rd;
    let mut e = vec![Q::zero(); v.len()];
    for &l in rd.labels() {
        e[rd.pos(sd.arrow_image(l)).unwrap()] = v[rd.pos(l).unwrap()].clone();
    }
    let w = rd.weyl_apply_q(&sd.w_black(), &e).unwrap();
    qmath::neg(&w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColorType {
    #[serde(rename = "2a")]
    TwoA,
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b")]
    B,
}

impl fmt::Display for ColorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ColorType::TwoA => "(2a)",
            ColorType::A => "(a)",
            ColorType::B => "(b)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorInfo {
    /// 1-based color index, equal to the restricted simple root index.
    pub index: usize,
    pub stabilizer: ParabolicSubset,
    /// `α' − σ(α')` in root coordinates of `g`.
    pub spherical_root: Vec<i64>,
    pub kind: ColorType,
    pub a_d: i64,
}

#[derive(Debug, Clone)]
pub struct RestrictedDatum {
    pub satake: SatakeDiagram,
    /// `R'_O` in OV numbering.
    pub rd: RootDatum,
    /// `λ_i` in root coordinates of `g`.
    pub lambdas: Vec<QVec>,
    /// `γ_j` in `λ∨` coordinates; `<λ_i, γ_j> = δ_ij`.
    pub gammas: Vec<QVec>,
    pub colors: Vec<ColorInfo>,
    /// Cartan integers of `g^σ` components, canonicalized.
    pub k_types: Vec<CartanType>,
}

impl RestrictedDatum {
    pub fn rank(&self) -> usize {
        self.rd.rank()
    }

    /// `<π-coordinates of y, λ∨-coordinates of x>`.
    pub fn eval(y: &[Q], x: &[Q]) -> Q {
        qmath::dot(y, x)
    }

    /// `λ_i` as a functional in fundamental weight coordinates.
    pub fn lambda_weight(&self, i: usize) -> QVec {
        self.rd.cartan()[i - 1].iter().map(|&c| q(c)).collect()
    }

    /// `ε(D_i) = λ_i∨ / 2`.
    pub fn color_point(&self, i: usize) -> QVec {
        let mut v = vec![Q::zero(); self.rank()];
        v[i - 1] = qmath::qf(1, 2);
        v
    }

    /// `λ_i∨` as a vector.
    pub fn coroot(&self, i: usize) -> QVec {
        let mut v = vec![Q::zero(); self.rank()];
        v[i - 1] = Q::one();
        v
    }

    /// `true` when `x` lies in the valuation cone `V = {x : <λ_i, x> ≤ 0 ∀i}`.
    pub fn in_valuation_cone(&self, x: &[Q]) -> bool {
        (1..=self.rank()).all(|i| Self::eval(&self.lambda_weight(i), x) <= Q::zero())
    }
}

/// The components of `g^σ`, read off the extended diagram with the contact
/// node removed.
pub fn k_types(sd: &SatakeDiagram, j0: usize) -> Result<Vec<CartanType>, SymError> {
    let ext = sd.rd.extended_cartan()?;
    let keep: Vec<usize> = (0..ext.len()).filter(|&i| i != j0).collect();
    let cartan = keep.iter().map(|&i| keep.iter().map(|&j| ext[i][j]).collect()).collect();
    let sub = RootDatum::from_cartan(cartan, keep.clone())?;
    Ok(component_types(&sub))
}

/// Node `j0` with `<ρ, α_{j0}∨> ≠ 0`, which is unique outside type A.
pub fn contact_node(rd: &RootDatum) -> Result<usize, SymError> {
    let rho = rd.highest_root()?;
    let nodes: Vec<usize> =
        rd.labels().iter().copied().filter(|&l| rd.pairing(&rho, l).map(|p| p != 0).unwrap_or(false)).collect();
    match nodes.as_slice() {
        [j] => Ok(*j),
        _ => Err(SymError::UnsupportedType("highest root is not attached to a single node".into())),
    }
}

pub fn restricted_datum(sd: &SatakeDiagram) -> Result<RestrictedDatum, SymError> {
    let rd = &sd.rd;
    let n = rd.rank();
    let restrict = |v: &[Q]| -> QVec {
        let s = sigma_on_characters(sd, v);
        qmath::scale(&qmath::sub(v, &s), &qmath::qf(1, 2))
    };
    let m = sd.restricted_type.rank;
    let mut lambdas: Vec<Option<QVec>> = vec![None; m];
    for (&j, &i) in &sd.restriction {
        let mut e = vec![Q::zero(); n];
        e[rd.pos(j)?] = Q::one();
        let bar = restrict(&e);
        match &lambdas[i - 1] {
            Some(old) if *old != bar => {
                return Err(SymError::Inconsistent(format!("white nodes with image λ{i} restrict differently")))
            }
            _ => lambdas[i - 1] = Some(bar),
        }
    }
    let lambdas: Vec<QVec> = lambdas
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.ok_or_else(|| SymError::Inconsistent(format!("λ{} has no white node", i + 1))))
        .collect::<Result<_, _>>()?;
    for b in &sd.black {
        let mut e = vec![Q::zero(); n];
        e[rd.pos(*b)?] = Q::one();
        if !qmath::is_zero(&restrict(&e)) {
            return Err(SymError::Inconsistent(format!("black node {b} restricts to a nonzero character")));
        }
    }
    // restricted Cartan matrix from the Killing form of g
    let rrd = build_root_datum(sd.restricted_type);
    for i in 0..m {
        for k in 0..m {
            let c = q(2) * rd.inner(&lambdas[i], &lambdas[k]) / rd.inner(&lambdas[k], &lambdas[k]);
            if c != q(rrd.cartan()[i][k]) {
                return Err(SymError::Inconsistent(format!(
                    "<λ{}|λ{}> = {} but {} has {}",
                    i + 1,
                    k + 1,
                    qmath::fmt_q(&c),
                    sd.restricted_type,
                    rrd.cartan()[i][k]
                )));
            }
        }
    }
    // every restriction of a root is an integral combination of the λ_i, and
    // the nonzero restrictions are exactly R'_O
    let mut seen = BTreeSet::new();
    for r in rd.roots() {
        let bar = restrict(&qvec(r));
        if qmath::is_zero(&bar) {
            continue;
        }
        let c = qmath::solve_combination(&lambdas, &bar)
            .ok_or_else(|| SymError::Inconsistent("restricted root outside span of λ".into()))?;
        let ci: Vec<i64> = c
            .iter()
            .map(qmath::to_i64)
            .collect::<Option<_>>()
            .ok_or_else(|| SymError::Inconsistent("restricted root not integral in λ".into()))?;
        seen.insert(ci);
    }
    let expected: BTreeSet<Vec<i64>> = rrd.roots().iter().cloned().collect();
    if seen != expected {
        return Err(SymError::Inconsistent(format!(
            "restricted roots ({}) differ from {} ({})",
            seen.len(),
            sd.restricted_type,
            expected.len()
        )));
    }
    let at: Vec<QVec> = (0..m).map(|k| (0..m).map(|i| q(rrd.cartan()[i][k])).collect()).collect();
    let gammas = qmath::inverse(&at).ok_or_else(|| SymError::Inconsistent("singular Cartan matrix".into()))?;
    let colors = color_table(sd, &lambdas)?;
    let j0 = contact_node(rd)?;
    let k_types = k_types(sd, j0)?;
    Ok(RestrictedDatum { satake: sd.clone(), rd: rrd, lambdas, gammas, colors, k_types })
}

fn color_table(sd: &SatakeDiagram, _lambdas: &[QVec]) -> Result<Vec<ColorInfo>, SymError> {
    let rd = &sd.rd;
    let n = rd.rank();
    let m = sd.restricted_type.rank;
    let mut out = Vec::new();
    for i in 1..=m {
        let reps: Vec<usize> = sd.restriction.iter().filter(|(_, &v)| v == i).map(|(&k, _)| k).collect();
        let mut info: Option<ColorInfo> = None;
        for &j in &reps {
            let mut e = vec![Q::zero(); n];
            let p = rd.pos(j)?;
            e[p] = Q::one();
            let sr = qmath::sub(&e, &sigma_on_characters(sd, &e));
            let sr: Vec<i64> = sr
                .iter()
                .map(qmath::to_i64)
                .collect::<Option<_>>()
                .ok_or_else(|| SymError::Inconsistent("spherical root is not integral".into()))?;
            let mut unit = vec![0i64; n];
            unit[p] = 1;
            let kind = if sr.iter().zip(&unit).all(|(a, b)| *a == 2 * b) {
                ColorType::TwoA
            } else if sr == unit {
                ColorType::A
            } else {
                ColorType::B
            };
            let mut a_d = if kind == ColorType::B { 0 } else { 1 };
            for beta in rd.positive_roots().iter().filter(|_| kind == ColorType::B) {
                let on_black = beta
                    .iter()
                    .enumerate()
                    .all(|(k, &c)| c == 0 || sd.black.contains(&rd.labels()[k]));
                if !on_black {
                    a_d += rd.pairing(beta, j)?;
                }
            }
            let ci = ColorInfo {
                index: i,
                stabilizer: ParabolicSubset::new(reps.iter().copied()),
                spherical_root: sr,
                kind,
                a_d,
            };
            match &info {
                Some(old) if *old != ci => {
                    return Err(SymError::Inconsistent(format!("color D{i} depends on the chosen simple root")))
                }
                _ => info = Some(ci),
            }
        }
        out.push(info.ok_or_else(|| SymError::Inconsistent(format!("no simple root for D{i}")))?);
    }
    Ok(out)
}

/// Coefficients of `−K`: 1 on every `G`-stable prime divisor and `a_D` on every color.
pub fn anticanonical_data(rrd: &RestrictedDatum, fan: &ColoredFan) -> Vec<(Divisor, i64)> {
    let mut out: Vec<(Divisor, i64)> = fan.g_stable_rays().into_iter().map(|r| (Divisor::GStable(r), 1)).collect();
    out.extend(rrd.colors.iter().map(|c| (Divisor::Color(c.index), c.a_d)));
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct SatakeNode {
    pub label: usize,
    pub black: bool,
    /// Restricted simple root `λ_i` this node restricts to, for white nodes.
    pub lambda: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SatakeJson {
    pub g: String,
    pub k: Vec<String>,
    pub restricted: String,
    pub nodes: Vec<SatakeNode>,
    pub arrows: Vec<(usize, usize)>,
    pub colors: Vec<ColorInfo>,
}

/// Satake diagram with its colors, as written by `table satake --format json`.
pub fn satake_json(rrd: &RestrictedDatum) -> SatakeJson {
    let sd = &rrd.satake;
    let nodes = sd
        .rd
        .labels()
        .iter()
        .map(|&l| SatakeNode { label: l, black: sd.black.contains(&l), lambda: sd.restriction.get(&l).copied() })
        .collect();
    SatakeJson {
        g: sd.g.to_string(),
        k: rrd.k_types.iter().map(ToString::to_string).collect(),
        restricted: sd.restricted_type.to_string(),
        nodes,
        arrows: sd.arrows.clone(),
        colors: rrd.colors.clone(),
    }
}

/// Convenience: the restricted datum of `g`.
pub fn restricted_of(t: CartanType) -> Result<RestrictedDatum, SymError> {
    restricted_datum(&satake_of(t)?)
}
