//! Reference values for the supported adjoint types, written out by hand.
//!
//! Nothing here is computed. The verifier compares every entry against the
//! computations in the other modules.

use crate::qmath::{q, qf, QVec};
use crate::rootcore::{CartanType, ParabolicSubset};
use crate::symdata::{ColorType, FanFamily, Row};

/// `dim Z_g = 2n + 1`.
pub fn n_value(t: CartanType) -> Option<usize> {
    let r = t.rank;
    Some(match Row::of(t).ok()? {
        Row::BHigh | Row::B3 => 2 * r - 3,
        Row::DHigh | Row::D5 | Row::D4 => 2 * r - 4,
        Row::E6 => 10,
        Row::E7 => 16,
        Row::E8 => 28,
        Row::F4 => 7,
        Row::G2 => 2,
    })
}

/// Contact node `α_{j0}`.
pub fn contact_node(row: Row) -> usize {
    match row {
        Row::E6 | Row::E7 => 6,
        Row::E8 => 1,
        Row::F4 => 4,
        _ => 2,
    }
}

/// Components of `g^σ` as usually written (before canonicalization).
pub fn k_type_names(t: CartanType) -> Vec<String> {
    let r = t.rank;
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect();
    match Row::of(t).unwrap() {
        Row::BHigh => vec![format!("B{}", r - 2), "A1".into(), "A1".into()],
        Row::B3 => s(&["A1", "A1", "A1"]),
        Row::DHigh | Row::D5 => vec![format!("D{}", r - 2), "A1".into(), "A1".into()],
        Row::D4 => s(&["A1", "A1", "A1", "A1"]),
        Row::E6 => s(&["A5", "A1"]),
        Row::E7 => s(&["D6", "A1"]),
        Row::E8 => s(&["E7", "A1"]),
        Row::F4 => s(&["C3", "A1"]),
        Row::G2 => s(&["A1", "A1"]),
    }
}

pub fn restricted_type(row: Row) -> &'static str {
    match row {
        Row::BHigh | Row::DHigh | Row::D5 => "B4",
        Row::B3 => "B3",
        Row::D4 => "D4",
        Row::E6 | Row::E7 | Row::E8 | Row::F4 => "F4",
        Row::G2 => "G2",
    }
}

/// `(white node, λ index)` pairs of the Satake diagram.
pub fn lambda_assignment(row: Row) -> Vec<(usize, usize)> {
    match row {
        Row::BHigh | Row::DHigh | Row::D4 => (1..=4).map(|i| (i, i)).collect(),
        Row::B3 => (1..=3).map(|i| (i, i)).collect(),
        Row::D5 => vec![(1, 1), (2, 2), (3, 3), (4, 4), (5, 4)],
        Row::E6 => vec![(1, 1), (5, 1), (2, 2), (4, 2), (3, 3), (6, 4)],
        Row::E7 => vec![(2, 1), (4, 2), (5, 3), (6, 4)],
        Row::E8 => vec![(7, 1), (3, 2), (2, 3), (1, 4)],
        Row::F4 => (1..=4).map(|i| (i, i)).collect(),
        Row::G2 => vec![(1, 1), (2, 2)],
    }
}

/// Closed forms of `γ_j` in `λ∨` coordinates for the restricted type.
pub fn gamma_closed_form(restricted: &str) -> Vec<QVec> {
    let v = |x: &[(i64, i64)]| x.iter().map(|&(n, d)| qf(n, d)).collect::<QVec>();
    let b = |m: usize| -> Vec<QVec> {
        (1..=m)
            .map(|i| {
                (1..=m)
                    .map(|k| {
                        if i < m {
                            if k < i {
                                q(k as i64)
                            } else if k < m {
                                q(i as i64)
                            } else {
                                qf(i as i64, 2)
                            }
                        } else if k < m {
                            q(k as i64)
                        } else {
                            qf(m as i64, 2)
                        }
                    })
                    .collect()
            })
            .collect()
    };
    match restricted {
        "B3" => b(3),
        "B4" => b(4),
        "D4" => vec![
            v(&[(1, 1), (1, 1), (1, 2), (1, 2)]),
            v(&[(1, 1), (2, 1), (1, 1), (1, 1)]),
            v(&[(1, 2), (1, 1), (1, 1), (1, 2)]),
            v(&[(1, 2), (1, 1), (1, 2), (1, 1)]),
        ],
        "F4" => vec![
            v(&[(2, 1), (3, 1), (4, 1), (2, 1)]),
            v(&[(3, 1), (6, 1), (8, 1), (4, 1)]),
            v(&[(2, 1), (4, 1), (6, 1), (3, 1)]),
            v(&[(1, 1), (2, 1), (3, 1), (2, 1)]),
        ],
        "G2" => vec![v(&[(2, 1), (3, 1)]), v(&[(1, 1), (2, 1)])],
        _ => vec![],
    }
}

/// The colored cone of the Chow normalization.
pub fn chow_cone(f: FanFamily) -> &'static str {
    match f {
        FanFamily::BD => "-g1,-g2,-g4,l2,l4 | 2,4",
        FanFamily::B3 => "-g1,-g2,-g3,l2 | 2",
        FanFamily::D4 => "-g1,-g2,-g3,-g4,l2 | 2",
        FanFamily::EF => "-g1,-g4,l1,l2,l4 | 1,2,4",
        FanFamily::G2 => "-g2,l2 | 2",
    }
}

/// Maximal colored cones of the Hilbert fan.
pub fn hilb_cones(f: FanFamily) -> Vec<&'static str> {
    match f {
        FanFamily::BD => vec!["-g2,-g4,l2,l4 | 2,4", "-g1,-g2,-g4,l2 | 2"],
        FanFamily::B3 => vec!["-g1,-g2,l2 | 2", "-g3,-g2,l2 | 2"],
        FanFamily::D4 => vec!["-g2,-g3,-g4,l2 | 2", "-g1,-g2,-g4,l2 | 2", "-g1,-g2,-g3,l2 | 2"],
        FanFamily::EF => vec!["-g1,-g4,l1,l4 | 1,4"],
        FanFamily::G2 => vec!["-g2,l2 | 2"],
    }
}

/// Nonzero, non-maximal faces of the Chow and Hilbert fans (cones only).
pub fn face_list(f: FanFamily, hilb: bool) -> Vec<&'static str> {
    let mut v: Vec<&'static str> = match f {
        FanFamily::BD => vec!["-g1,-g2,-g4", "-g2,-g4,l4", "-g1,-g2", "-g1,-g4", "-g2,-g4", "-g4,l4", "-g1", "-g2", "-g4"],
        FanFamily::B3 => vec!["-g1,-g2", "-g2,-g3", "-g1", "-g2", "-g3"],
        FanFamily::D4 => vec![
            "-g2,-g1,-g3",
            "-g2,-g1,-g4",
            "-g2,-g3,-g4",
            "-g1,-g2",
            "-g1,-g3",
            "-g1,-g4",
            "-g2,-g3",
            "-g2,-g4",
            "-g3,-g4",
            "-g1",
            "-g2",
            "-g3",
            "-g4",
        ],
        FanFamily::EF => vec!["-g1,-g4,l1", "-g1,-g4", "-g1,l1", "-g1", "-g4"],
        FanFamily::G2 => vec!["-g2"],
    };
    if hilb {
        v.extend(match f {
            FanFamily::BD => vec!["-g2,-g1,l2", "-g2,-g4,l2", "-g2,l2"],
            FanFamily::B3 => vec!["-g2,l2"],
            FanFamily::D4 => vec!["-g2,-g1,l2", "-g2,-g3,l2", "-g2,-g4,l2", "-g2,l2"],
            FanFamily::EF => vec!["-g1,-g4,l4", "-g4,l4"],
            FanFamily::G2 => vec![],
        });
    }
    v
}

/// `B`-stable planes: `(β, missing set of the plane stabilizer, plane lies in Z)`.
pub fn b_stable_planes(t: CartanType) -> Vec<(usize, Vec<usize>, bool)> {
    match Row::of(t).unwrap() {
        Row::BHigh | Row::DHigh => vec![(1, vec![3], true), (3, vec![1, 4], true)],
        Row::B3 => vec![(1, vec![3], true), (3, vec![1, 3], false)],
        Row::D5 => vec![(1, vec![3], true), (3, vec![1, 4, 5], true)],
        Row::D4 => vec![(1, vec![3, 4], true), (3, vec![1, 4], true), (4, vec![1, 3], true)],
        Row::E6 => vec![(3, vec![2, 4], true)],
        Row::E7 => vec![(5, vec![4], true)],
        Row::E8 => vec![(2, vec![3], true)],
        Row::F4 => vec![(3, vec![2], true)],
        Row::G2 => vec![(1, vec![1], false)],
    }
}

/// Stabilizer of the `B`-stable line: the isotropy of the Chow closed orbit.
pub fn line_stabilizer(row: Row) -> ParabolicSubset {
    ParabolicSubset::new(match row {
        Row::BHigh | Row::B3 | Row::DHigh | Row::D5 => vec![1, 3],
        Row::D4 => vec![1, 3, 4],
        Row::E6 => vec![3],
        Row::E7 => vec![5],
        Row::E8 => vec![2],
        Row::F4 => vec![3],
        Row::G2 => vec![1],
    })
}

/// Isotropy groups of the closed orbits of the Hilbert scheme, one per plane.
pub fn hilb_isotropy(row: Row) -> Vec<ParabolicSubset> {
    let p = |v: &[usize]| ParabolicSubset::new(v.iter().copied());
    match row {
        Row::BHigh | Row::DHigh => vec![p(&[1, 3]), p(&[1, 3, 4])],
        Row::D5 => vec![p(&[1, 3]), p(&[1, 3, 4, 5])],
        Row::D4 => vec![p(&[1, 3, 4]); 3],
        Row::B3 => vec![p(&[1, 3]), p(&[1, 3])],
        Row::E6 => vec![p(&[2, 3, 4])],
        Row::E7 => vec![p(&[4, 5])],
        Row::E8 => vec![p(&[2, 3])],
        Row::F4 => vec![p(&[2, 3])],
        Row::G2 => vec![p(&[1])],
    }
}

/// `(w0 P_{I_i} w0⁻¹)⁻` for each color `D_i`, as missing sets.
pub fn twisted_color_parabolics(row: Row) -> Vec<Vec<usize>> {
    match row {
        Row::BHigh | Row::DHigh | Row::D4 | Row::F4 => (1..=4).map(|i| vec![i]).collect(),
        Row::B3 => (1..=3).map(|i| vec![i]).collect(),
        Row::G2 => vec![vec![1], vec![2]],
        Row::D5 => vec![vec![1], vec![2], vec![3], vec![4, 5]],
        Row::E6 => vec![vec![1, 5], vec![2, 4], vec![3], vec![6]],
        Row::E7 => vec![vec![2], vec![4], vec![5], vec![6]],
        Row::E8 => vec![vec![7], vec![3], vec![2], vec![1]],
    }
}

/// `|W_Q \ W_{P^ss} / W_Q|`.
pub fn double_cosets(row: Row) -> usize {
    match row {
        Row::BHigh | Row::DHigh | Row::D5 => 6,
        Row::D4 => 8,
        Row::G2 => 2,
        _ => 4,
    }
}

/// Components of `P^ss`.
pub fn pss_types(t: CartanType) -> Vec<String> {
    let r = t.rank;
    match Row::of(t).unwrap() {
        Row::BHigh => vec!["A1".into(), format!("B{}", r - 2)],
        Row::B3 => vec!["A1".into(), "A1".into()],
        Row::DHigh | Row::D5 => vec!["A1".into(), format!("D{}", r - 2)],
        Row::D4 => vec!["A1".into(), "A1".into(), "A1".into()],
        Row::E6 => vec!["A5".into()],
        Row::E7 => vec!["D6".into()],
        Row::E8 => vec!["E7".into()],
        Row::F4 => vec!["C3".into()],
        Row::G2 => vec!["A1".into()],
    }
}

/// Spherical root, type and anticanonical coefficient of one color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorRow {
    pub spherical_root: Vec<i64>,
    pub kind: ColorType,
    pub a_d: i64,
}

/// Colors in index order. For `E8` the spherical roots are listed by `α'`
/// index rather than by color, so callers compare them as a set.
pub fn color_rows(t: CartanType) -> Vec<ColorRow> {
    let n = t.rank;
    let unit = |i: usize, c: i64| {
        let mut v = vec![0; n];
        v[i - 1] = c;
        v
    };
    let two_a = |i: usize| ColorRow { spherical_root: unit(i, 2), kind: ColorType::TwoA, a_d: 1 };
    let b = |coefs: &[(usize, i64)], a_d: i64| {
        let mut v = vec![0; n];
        for &(i, c) in coefs {
            v[i - 1] = c;
        }
        ColorRow { spherical_root: v, kind: ColorType::B, a_d }
    };
    let r = n as i64;
    match Row::of(t).unwrap() {
        Row::BHigh if n == 4 => (1..=4).map(two_a).collect(),
        Row::BHigh => {
            let mut v: Vec<ColorRow> = (1..=3).map(two_a).collect();
            v.push(b(&(4..=n).map(|i| (i, 2)).collect::<Vec<_>>(), 2 * r - 7));
            v
        }
        Row::B3 => (1..=3).map(two_a).collect(),
        Row::DHigh => {
            let mut v: Vec<ColorRow> = (1..=3).map(two_a).collect();
            let mut c: Vec<(usize, i64)> = (4..=n - 2).map(|i| (i, 2)).collect();
            c.push((n - 1, 1));
            c.push((n, 1));
            v.push(b(&c, 2 * (r - 4)));
            v
        }
        Row::D5 => {
            let mut v: Vec<ColorRow> = (1..=3).map(two_a).collect();
            v.push(b(&[(4, 1), (5, 1)], 2));
            v
        }
        Row::D4 => (1..=4).map(two_a).collect(),
        Row::E6 => vec![b(&[(1, 1), (5, 1)], 2), b(&[(2, 1), (4, 1)], 2), two_a(3), two_a(6)],
        Row::E7 => vec![b(&[(1, 1), (2, 2), (3, 1)], 4), b(&[(3, 1), (4, 2), (7, 1)], 4), two_a(5), two_a(6)],
        Row::E8 => vec![
            ColorRow { spherical_root: unit(1, 2), kind: ColorType::B, a_d: 8 },
            ColorRow { spherical_root: unit(2, 2), kind: ColorType::B, a_d: 8 },
            ColorRow {
                spherical_root: vec![0, 0, 2, 2, 2, 1, 0, 1],
                kind: ColorType::TwoA,
                a_d: 1,
            },
            ColorRow {
                spherical_root: vec![0, 0, 0, 1, 2, 2, 2, 1],
                kind: ColorType::TwoA,
                a_d: 1,
            },
        ],
        Row::F4 => (1..=4).map(two_a).collect(),
        Row::G2 => (1..=2).map(two_a).collect(),
    }
}

/// Orbit counts of the Chow and Hilbert normalizations.
pub fn orbit_counts(f: FanFamily) -> (usize, usize) {
    match f {
        FanFamily::BD => (11, 15),
        FanFamily::B3 | FanFamily::EF => (7, 9),
        FanFamily::D4 => (15, 21),
        FanFamily::G2 => (3, 3),
    }
}

/// Orbit types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum OrbitLabel {
    Twistor,
    NPC,
    PC,
    NPR,
    PR,
    NPD,
    PD,
    /// All double lines, collapsed to one orbit in the Chow scheme.
    DL,
}

impl OrbitLabel {
    pub fn parse(s: &str) -> Option<Self> {
        use OrbitLabel::*;
        Some(match s {
            "Twistor" | "T" => Twistor,
            "NPC" => NPC,
            "PC" => PC,
            "NPR" => NPR,
            "PR" => PR,
            "NPD" => NPD,
            "PD" => PD,
            "DL" | "D" => DL,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        use OrbitLabel::*;
        match self {
            Twistor => "Twistor",
            NPC => "NPC",
            PC => "PC",
            NPR => "NPR",
            PR => "PR",
            NPD => "NPD",
            PD => "PD",
            DL => "DL",
        }
    }

    pub fn is_double(&self) -> bool {
        matches!(self, OrbitLabel::NPD | OrbitLabel::PD | OrbitLabel::DL)
    }

    pub fn is_reducible(&self) -> bool {
        matches!(self, OrbitLabel::NPR | OrbitLabel::PR)
    }
}

/// Orbit type multiset, in the order
/// Twistor, NPC, PC, NPR, PR, NPD, PD (Hilbert) or with `DL` replacing the
/// double line types (Chow).
pub fn type_counts(f: FanFamily, hilb: bool) -> Vec<(OrbitLabel, usize)> {
    use OrbitLabel::*;
    let (c, d): (Vec<usize>, [usize; 2]) = match f {
        FanFamily::BD => (vec![1, 2, 2, 3, 2], [3, 2]),
        FanFamily::B3 | FanFamily::EF => (vec![1, 1, 1, 2, 1], [2, 1]),
        FanFamily::D4 => (vec![1, 3, 3, 4, 3], [4, 3]),
        FanFamily::G2 => (vec![1, 0, 0, 1, 0], [1, 0]),
    };
    let mut v: Vec<(OrbitLabel, usize)> = [Twistor, NPC, PC, NPR, PR].into_iter().zip(c).collect();
    if hilb {
        v.push((NPD, d[0]));
        v.push((PD, d[1]));
    } else {
        v.push((DL, 1));
    }
    v.retain(|&(_, n)| n > 0);
    v
}

/// Orbit labels of the Hilbert fan, keyed by cone.
pub fn hilb_labels(f: FanFamily) -> Vec<(&'static str, OrbitLabel)> {
    use OrbitLabel::*;
    match f {
        FanFamily::BD => vec![
            ("", Twistor),
            ("-g1", NPC),
            ("-g4", NPC),
            ("-g2", NPR),
            ("-g1,-g2", NPR),
            ("-g2,-g4", NPR),
            ("-g1,-g4", PC),
            ("-g4,l4", PC),
            ("-g2,l2", NPD),
            ("-g1,-g2,-g4", PR),
            ("-g2,-g4,l4", PR),
            ("-g1,-g2,l2", NPD),
            ("-g2,-g4,l2", NPD),
            ("-g2,-g4,l2,l4", PD),
            ("-g1,-g2,-g4,l2", PD),
        ],
        // the two closed orbits are exchanged by a symmetry of the diagram;
        // the planar one is placed on the γ3 side
        FanFamily::B3 => vec![
            ("", Twistor),
            ("-g1", NPC),
            ("-g3", PC),
            ("-g2", NPR),
            ("-g1,-g2", NPR),
            ("-g2,-g3", PR),
            ("-g2,l2", NPD),
            ("-g1,-g2,l2", NPD),
            ("-g2,-g3,l2", PD),
        ],
        FanFamily::D4 => vec![
            ("", Twistor),
            ("-g1", NPC),
            ("-g3", NPC),
            ("-g4", NPC),
            ("-g2", NPR),
            ("-g1,-g3", PC),
            ("-g1,-g4", PC),
            ("-g3,-g4", PC),
            ("-g1,-g2", NPR),
            ("-g2,-g3", NPR),
            ("-g2,-g4", NPR),
            ("-g2,l2", NPD),
            ("-g1,-g2,-g3", PR),
            ("-g1,-g2,-g4", PR),
            ("-g2,-g3,-g4", PR),
            ("-g1,-g2,l2", NPD),
            ("-g2,-g3,l2", NPD),
            ("-g2,-g4,l2", NPD),
            ("-g2,-g3,-g4,l2", PD),
            ("-g1,-g2,-g4,l2", PD),
            ("-g1,-g2,-g3,l2", PD),
        ],
        FanFamily::EF => vec![
            ("", Twistor),
            ("-g1", NPC),
            ("-g4", NPR),
            ("-g1,l1", PC),
            ("-g1,-g4", NPR),
            ("-g4,l4", NPD),
            ("-g1,-g4,l1", PR),
            ("-g1,-g4,l4", NPD),
            ("-g1,-g4,l1,l4", PD),
        ],
        FanFamily::G2 => vec![("", Twistor), ("-g2", NPR), ("-g2,l2", NPD)],
    }
}

/// Hasse diagram edges of the Hilbert orbit posets, as `(upper, lower, multiplicity)`.
pub fn hasse_edges(f: FanFamily) -> Vec<(OrbitLabel, OrbitLabel, usize)> {
    use OrbitLabel::*;
    match f {
        FanFamily::BD => vec![
            (Twistor, NPC, 2),
            (Twistor, NPR, 1),
            (NPC, PC, 3),
            (NPC, NPR, 2),
            (NPR, NPR, 2),
            (NPR, NPD, 3),
            (PC, PR, 2),
            (NPR, PR, 3),
            (NPD, NPD, 2),
            (PR, PD, 2),
            (NPD, PD, 3),
        ],
        FanFamily::B3 => vec![
            (Twistor, NPC, 1),
            (Twistor, NPR, 1),
            (Twistor, PC, 1),
            (NPC, NPR, 1),
            (NPR, NPR, 1),
            (NPR, NPD, 2),
            (NPR, PR, 1),
            (PC, PR, 1),
            (NPD, NPD, 1),
            (NPD, PD, 1),
            (PR, PD, 1),
        ],
        FanFamily::D4 => vec![
            (Twistor, NPC, 3),
            (Twistor, NPR, 1),
            (NPC, PC, 6),
            (NPC, NPR, 3),
            (NPR, NPR, 3),
            (NPR, NPD, 4),
            (PC, PR, 3),
            (NPR, PR, 6),
            (NPD, NPD, 3),
            (PR, PD, 3),
            (NPD, PD, 6),
        ],
        FanFamily::EF => vec![
            (Twistor, NPC, 1),
            (Twistor, NPR, 1),
            (NPC, PC, 1),
            (NPC, NPR, 1),
            (NPR, NPR, 1),
            (NPR, NPD, 2),
            (PC, PR, 1),
            (NPR, PR, 1),
            (NPD, NPD, 1),
            (PR, PD, 1),
            (NPD, PD, 1),
        ],
        FanFamily::G2 => vec![(Twistor, NPR, 1), (NPR, NPD, 1)],
    }
}

/// Generator of the ray of the divisor of reducible conics.
pub fn reducible_ray(f: FanFamily) -> &'static str {
    match f {
        FanFamily::EF => "-g4",
        _ => "-g2",
    }
}

/// A basis `B` (in `λ∨` coordinates) and dual basis `y` (in `π` coordinates)
/// exhibiting smoothness of one Hilbert maximal cone.
#[derive(Debug, Clone)]
pub struct RuzziFixture {
    pub cone: String,
    pub basis: Vec<String>,
    pub duals: Vec<String>,
}

pub fn ruzzi_fixtures(f: FanFamily) -> Vec<RuzziFixture> {
    let fx = |c: &str, b: &[&str], y: &[&str]| RuzziFixture {
        cone: c.into(),
        basis: b.iter().map(|s| s.to_string()).collect(),
        duals: y.iter().map(|s| s.to_string()).collect(),
    };
    match f {
        FanFamily::BD => vec![
            fx(
                "-g2,-g4,l2,l4 | 2,4",
                &["-1/2 -1 -1 -1/2", "-1/2 -1 -3/2 -1", "0 1/2 0 0", "0 0 0 1/2"],
                &["-4 2 0 0", "-6 0 2 0", "2 0 -2 2", "4 0 -2 0"],
            ),
            fx(
                "-g1,-g2,-g4,l2 | 2",
                &["-1 -1 -1 -1/2", "-1/2 -1 -1 -1/2", "-1/2 -1 -3/2 -1", "0 1/2 0 0"],
                &["0 2 -4 4", "2 0 -6 8", "-2 0 2 -2", "0 0 2 -4"],
            ),
        ],
        FanFamily::B3 => vec![
            fx("-g1,-g2,l2 | 2", &["-1 -1 -1/2", "-1/2 -1 -1/2", "0 1/2 0"], &["0 2 -4", "2 0 -4", "-2 0 2"]),
            fx("-g2,-g3,l2 | 2", &["-1/2 -1 -1/2", "-1 -2 -3/2", "0 1/2 0"], &["-4 2 0", "-6 0 4", "2 0 -2"]),
        ],
        FanFamily::D4 => {
            let mut v = Vec::new();
            for (i, j, k) in [(1usize, 3usize, 4usize), (3, 1, 4), (4, 1, 3)] {
                let vec4 = |c: &[(usize, &str)]| {
                    let mut a = ["0"; 4];
                    for &(p, s) in c {
                        a[p - 1] = s;
                    }
                    a.join(" ")
                };
                let b = [
                    "-1/2 -1 -1/2 -1/2".to_string(),
                    vec4(&[(2, "-1"), (i, "-1/2"), (j, "-1/2"), (k, "-1")]),
                    vec4(&[(2, "-1"), (i, "-1/2"), (j, "-1"), (k, "-1/2")]),
                    vec4(&[(2, "1/2")]),
                ];
                let mut y12 = [2i64, 0, 2, 2];
                y12[i - 1] -= 8;
                let y = [
                    vec4(&[(2, "2"), (i, "-4")]),
                    y12.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
                    vec4(&[(i, "2"), (j, "-2")]),
                    vec4(&[(i, "2"), (k, "-2")]),
                ];
                let mut g: Vec<usize> = vec![2, j, k];
                g.sort();
                let cone = format!("-g{},-g{},-g{},l2 | 2", g[0], g[1], g[2]);
                v.push(RuzziFixture { cone, basis: b.to_vec(), duals: y.to_vec() });
            }
            v
        }
        FanFamily::EF => vec![fx(
            "-g1,-g4,l1,l4 | 1,4",
            &["-1 -3/2 -2 -1", "-1/2 -1 -3/2 -1", "1/2 0 0 0", "0 0 0 1/2"],
            &["2 -4 2 0", "0 -6 4 0", "0 4 -4 2", "0 8 -6 0"],
        )],
        FanFamily::G2 => vec![],
    }
}

/// Types in the default verification sweep.
pub fn default_types(max_rank: usize) -> Vec<CartanType> {
    let mut v = Vec::new();
    for r in 3..=max_rank {
        v.push(format!("B{r}"));
    }
    for r in 4..=max_rank {
        v.push(format!("D{r}"));
    }
    v.extend(["E6", "E7", "E8", "F4", "G2"].map(String::from));
    v.iter().map(|s| s.parse().unwrap()).collect()
}

/// Parses loose type names into a sorted canonical multiset.
pub fn canonical_types(names: &[String]) -> Vec<CartanType> {
    let mut v: Vec<CartanType> = names.iter().flat_map(|s| CartanType::parse_loose(s).expect("valid type name")).collect();
    v.sort();
    v
}
