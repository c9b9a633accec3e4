use std::collections::BTreeSet;

use conicfan::qmath::{q, qf, Q, QVec};
use conicfan::reference;
use conicfan::rootcore::CartanType;
use conicfan::symdata::{restricted_of, satake_json, satake_of, sigma_on_characters, ColorType, Row};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn ty(s: &str) -> CartanType {
    s.parse().unwrap()
}

/// Plain Gauss-Jordan inverse over Q, kept separate from the library's.
fn gj_inverse(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("invertible");
        a.swap(c, p);
        let inv = Q::one() / a[c][c].clone();
        for x in a[c].iter_mut() {
            *x *= inv.clone();
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..2 * n {
                    let t = a[c][k].clone() * f.clone();
                    a[r][k] -= t;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

#[test]
fn gammas_invert_the_restricted_cartan_matrix() {
    for s in ["B3", "B4", "B7", "D4", "D5", "D6", "D8", "E6", "E7", "E8", "F4", "G2"] {
        let r = restricted_of(ty(s)).unwrap();
        let n = r.rank();
        let a: Vec<Vec<Q>> = (0..n).map(|i| r.rd.cartan()[i].iter().map(|&c| q(c)).collect()).collect();
        // <λ_i, γ_j> = Σ_k A'[i][k] γ_j[k] = δ_ij, so γ_j is column j of A'^{-1}
        let inv = gj_inverse(&a);
        for j in 0..n {
            let col: QVec = (0..n).map(|k| inv[k][j].clone()).collect();
            assert_eq!(r.gammas[j], col, "{s} γ{}", j + 1);
            for i in 1..=n {
                let v = conicfan::qmath::dot(&r.lambda_weight(i), &r.gammas[j]);
                assert_eq!(v, if i == j + 1 { Q::one() } else { Q::zero() });
            }
        }
    }
}

#[test]
fn gammas_match_closed_forms() {
    for (g, restricted) in [("B3", "B3"), ("B4", "B4"), ("B6", "B4"), ("D7", "B4"), ("D4", "D4"), ("E6", "F4"), ("E8", "F4"), ("G2", "G2")] {
        let r = restricted_of(ty(g)).unwrap();
        assert_eq!(r.satake.restricted_type.to_string(), restricted);
        assert_eq!(r.gammas, reference::gamma_closed_form(restricted), "{g}");
    }
}

#[test]
fn g2_and_b3_gammas() {
    let g2 = restricted_of(ty("G2")).unwrap();
    assert_eq!(g2.gammas, vec![vec![q(2), q(3)], vec![q(1), q(2)]]);
    let b3 = restricted_of(ty("B3")).unwrap();
    assert_eq!(b3.gammas[2], vec![q(1), q(2), qf(3, 2)]);
}

#[test]
fn type_b_color_coefficient_formulas() {
    for r in 5..=12 {
        let b = restricted_of(ty(&format!("B{r}"))).unwrap();
        let c = &b.colors[3];
        assert_eq!((c.kind, c.a_d), (ColorType::B, 2 * r as i64 - 7), "B{r}");
        assert_eq!(c.spherical_root, (1..=r).map(|i| if i >= 4 { 2 } else { 0 }).collect::<Vec<i64>>());
    }
    for r in 6..=12 {
        let d = restricted_of(ty(&format!("D{r}"))).unwrap();
        let c = &d.colors[3];
        assert_eq!((c.kind, c.a_d), (ColorType::B, 2 * (r as i64 - 4)), "D{r}");
    }
    let d5 = restricted_of(ty("D5")).unwrap();
    assert_eq!(d5.colors[3].a_d, 2);
}

#[test]
fn colors_match_reference_rows() {
    for s in ["B3", "B4", "B5", "B8", "D4", "D5", "D6", "D8", "E6", "E7", "F4", "G2"] {
        let r = restricted_of(ty(s)).unwrap();
        let got: Vec<_> = r.colors.iter().map(|c| (c.spherical_root.clone(), c.kind, c.a_d)).collect();
        let want: Vec<_> = reference::color_rows(ty(s)).into_iter().map(|c| (c.spherical_root, c.kind, c.a_d)).collect();
        assert_eq!(got, want, "{s}");
    }
}

#[test]
fn e8_spherical_roots_as_a_set() {
    let r = restricted_of(ty("E8")).unwrap();
    let got: BTreeSet<Vec<i64>> = r.colors.iter().map(|c| c.spherical_root.clone()).collect();
    let want: BTreeSet<Vec<i64>> = reference::color_rows(ty("E8")).into_iter().map(|c| c.spherical_root).collect();
    assert_eq!(got, want);
    let mut kinds: Vec<(String, i64)> = r.colors.iter().map(|c| (c.kind.to_string(), c.a_d)).collect();
    kinds.sort();
    assert_eq!(kinds, vec![("(2a)".into(), 1), ("(2a)".into(), 1), ("(b)".into(), 8), ("(b)".into(), 8)]);
}

#[test]
fn lambda_assignment_and_k_types() {
    for row in Row::ALL {
        let t = row.representative();
        let r = restricted_of(t).unwrap();
        let got: BTreeSet<(usize, usize)> = r.satake.restriction.iter().map(|(&a, &b)| (a, b)).collect();
        let want: BTreeSet<(usize, usize)> = reference::lambda_assignment(row).into_iter().collect();
        assert_eq!(got, want, "{t}");
        let mut k = r.k_types.clone();
        k.sort();
        let mut wk = reference::canonical_types(&reference::k_type_names(t));
        wk.sort();
        assert_eq!(k, wk, "{t}");
    }
}

#[test]
fn satake_json_shape() {
    let r = restricted_of(ty("E6")).unwrap();
    let v = serde_json::to_value(satake_json(&r)).unwrap();
    assert_eq!(v["g"], "E6");
    assert_eq!(v["restricted"], "F4");
    assert_eq!(v["nodes"].as_array().unwrap().len(), 6);
    assert_eq!(v["colors"].as_array().unwrap().len(), 4);
    assert_eq!(v["colors"][0]["kind"], "b");
    assert!(v["nodes"].as_array().unwrap().iter().all(|n| n["lambda"].is_u64()));
}

#[test]
fn unsupported_types_are_rejected() {
    for s in ["A3", "C4", "B2", "D3"] {
        assert!(s.parse::<CartanType>().map(|t| satake_of(t).is_err()).unwrap_or(true), "{s}");
    }
}

const TYPES: [&str; 9] = ["B3", "B5", "D4", "D5", "D7", "E6", "E7", "E8", "G2"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sigma_is_an_involution(ti in 0..TYPES.len(), v in prop::collection::vec(-6i64..=6, 8)) {
        let sd = satake_of(ty(TYPES[ti])).unwrap();
        let x: QVec = v[..sd.rd.rank()].iter().map(|&c| q(c)).collect();
        let s = sigma_on_characters(&sd, &x);
        prop_assert_eq!(sigma_on_characters(&sd, &s), x);
    }

    #[test]
    fn valuation_cone_contains_negative_gammas(ti in 0..TYPES.len(), w in prop::collection::vec(0i64..5, 4)) {
        let r = restricted_of(ty(TYPES[ti])).unwrap();
        let mut x: QVec = vec![Q::zero(); r.rank()];
        for (j, &c) in w.iter().take(r.rank()).enumerate() {
            x = conicfan::qmath::sub(&x, &conicfan::qmath::scale(&r.gammas[j], &q(c)));
        }
        prop_assert!(r.in_valuation_cone(&x));
    }
}
