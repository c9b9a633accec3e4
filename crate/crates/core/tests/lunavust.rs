use std::collections::BTreeSet;

use conicfan::conicatlas::build_entry;
use conicfan::lunavust::{
    colored_faces, export_fan_json, is_colored_cone, is_colored_fan, is_complete, orbit_poset, parse_fan_json, ColoredCone,
    ColoredFan, QCone,
};
use conicfan::notation::{parse_cone, parse_term, parse_vector};
use conicfan::qmath::{add, neg, q, QVec};
use conicfan::reference;
use conicfan::rootcore::CartanType;
use conicfan::symdata::FanFamily;
use proptest::prelude::*;

fn ty(s: &str) -> CartanType {
    s.parse().unwrap()
}

fn family_rep(f: FanFamily) -> CartanType {
    ty(match f {
        FanFamily::BD => "B5",
        FanFamily::B3 => "B3",
        FanFamily::D4 => "D4",
        FanFamily::EF => "F4",
        FanFamily::G2 => "G2",
    })
}

fn maximal_set(fan: &ColoredFan) -> BTreeSet<ColoredCone> {
    fan.maximal().into_iter().cloned().collect()
}

#[test]
fn entry_fans_are_complete_colored_fans() {
    for f in FanFamily::ALL {
        let e = build_entry(family_rep(f)).unwrap();
        for fan in [&e.chow_fan, &e.hilb_fan] {
            is_colored_fan(fan, &e.space).unwrap();
            assert!(is_complete(fan, &e.space));
            for c in fan.maximal() {
                is_colored_cone(c, &e.space).unwrap();
                assert!(c.cone.is_full());
            }
        }
        let (chow, hilb) = reference::orbit_counts(f);
        assert_eq!(orbit_poset(&e.chow_fan, &e.space).nodes.len(), chow, "{f:?}");
        assert_eq!(orbit_poset(&e.hilb_fan, &e.space).nodes.len(), hilb, "{f:?}");
    }
}

#[test]
fn fan_json_round_trip() {
    for f in FanFamily::ALL {
        let e = build_entry(family_rep(f)).unwrap();
        for fan in [&e.chow_fan, &e.hilb_fan] {
            let text = export_fan_json(fan, Some("X"));
            let raw = parse_fan_json(&text, Some(e.space.m())).unwrap();
            let cones: Vec<ColoredCone> = raw.iter().map(|r| r.build(e.space.m()).unwrap()).collect();
            let back = ColoredFan::from_maximal(&cones, &e.space);
            assert_eq!(maximal_set(&back), maximal_set(fan));
            assert_eq!(export_fan_json(&back, Some("X")), text);
        }
    }
}

#[test]
fn malformed_fan_json_is_rejected() {
    let ok = r#"{"space":"coroot(R'_O)","cones":[{"rays":[[1,0],[0,1]],"colors":[]}]}"#;
    assert_eq!(parse_fan_json(ok, Some(2)).unwrap().len(), 1);
    let bad = [
        "",
        "{",
        "[]",
        r#"{"space":"other","cones":[]}"#,
        r#"{"space":"coroot(R'_O)","cones":[{"rays":[[1,0],[0]],"colors":[]}]}"#,
        r#"{"space":"coroot(R'_O)","cones":[{"rays":[[1.5,0]],"colors":[]}]}"#,
        r#"{"space":"coroot(R'_O)","cones":[{"rays":[["x",0]],"colors":[]}]}"#,
        r#"{"space":"coroot(R'_O)","cones":[{"rays":[[1,0,0]],"colors":[]}]}"#,
        r#"{"space":"coroot(R'_O)","cones":[{"rays":[[1,0]],"colors":[-1]}]}"#,
    ];
    for b in bad {
        assert!(parse_fan_json(b, Some(2)).is_err(), "{b}");
    }
    let raw = parse_fan_json(r#"{"space":"coroot(R'_O)","cones":[{"rays":[[1,0]],"colors":[3]}]}"#, Some(2)).unwrap();
    assert!(raw[0].build(2).is_err());
    let raw = parse_fan_json(r#"{"space":"coroot(R'_O)","cones":[{"rays":[[1,0],[-1,0]],"colors":[]}]}"#, Some(2)).unwrap();
    assert!(raw[0].build(2).is_err(), "a line is not a strictly convex cone");
}

#[test]
fn rational_strings_in_fan_json() {
    let raw = parse_fan_json(r#"{"space":"coroot(R'_O)","cones":[{"rays":[["1/2","-3"]],"colors":[1]}]}"#, None).unwrap();
    assert_eq!(raw[0].rays[0], vec![conicfan::qmath::qf(1, 2), q(-3)]);
}

#[test]
fn notation_examples() {
    let c = parse_cone("-g1,-g2,-g4,l2,l4 | 2,4").unwrap();
    assert_eq!(c.terms.len(), 5);
    assert_eq!(c.colors, BTreeSet::from([2, 4]));
    assert!(parse_term("1/2*l3").is_ok());
    assert!(parse_term("g0").is_err());
    assert!(parse_term("x1").is_err());
    assert!(parse_cone("g1 | D2,x").is_err());
    assert_eq!(parse_vector("-1/2 1 0"), Some(vec![conicfan::qmath::qf(-1, 2), q(1), q(0)]));
    assert_eq!(parse_vector("1 a"), None);
}

#[test]
fn colored_faces_of_the_g2_chow_cone() {
    let e = build_entry(ty("G2")).unwrap();
    let max = e.chow_fan.maximal()[0].clone();
    let faces = colored_faces(&max, &e.space);
    assert!(faces.iter().all(|f| f.colors.is_subset(&max.colors)));
    assert!(faces.iter().any(|f| f.dim() == 0));
    assert_eq!(e.chow_fan.maximal().len(), 1);
}

fn qv(v: &[i64]) -> QVec {
    v.iter().map(|&x| q(x)).collect()
}

fn small_vec(d: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn faces_are_extreme_subsets(gens in prop::collection::vec(small_vec(3), 1..6)) {
        let gens: Vec<QVec> = gens.iter().map(|g| qv(g)).collect();
        let Ok(c) = QCone::new(3, &gens) else { return Ok(()); };
        for g in &gens {
            prop_assert!(c.contains(g));
        }
        let rays = c.rays_q();
        let faces = c.faces();
        prop_assert!(faces.contains(&c));
        prop_assert!(faces.iter().any(|f| f.dim() == 0));
        for f in &faces {
            prop_assert!(f.is_face_of(&c));
            prop_assert!(f.dim() <= c.dim());
            // x + y ∈ F with x, y ∈ C forces x, y ∈ F
            for a in &rays {
                for b in &rays {
                    if f.contains(&add(a, b)) {
                        prop_assert!(f.contains(a) && f.contains(b));
                    }
                }
            }
        }
        if c.dim() > 0 {
            prop_assert!(!c.contains(&neg(&rays[0])));
        }
    }

    #[test]
    fn single_cone_json_round_trip(gens in prop::collection::vec(small_vec(2), 1..4), colors in prop::collection::btree_set(1usize..=2, 0..2)) {
        let e = build_entry(ty("G2")).unwrap();
        let gens: Vec<QVec> = gens.iter().map(|g| qv(g)).collect();
        let Ok(cc) = ColoredCone::new(2, &gens, colors) else { return Ok(()); };
        prop_assume!(is_colored_cone(&cc, &e.space).is_ok());
        let fan = ColoredFan::from_maximal(std::slice::from_ref(&cc), &e.space);
        let text = export_fan_json(&fan, None);
        let raw = parse_fan_json(&text, Some(2)).unwrap();
        prop_assert_eq!(raw.len(), 1);
        prop_assert_eq!(raw[0].build(2).unwrap(), cc);
    }

    #[test]
    fn notation_parser_never_panics(s in ".{0,40}") {
        let _ = parse_cone(&s);
        let _ = parse_term(&s);
        let _ = parse_vector(&s);
    }

    #[test]
    fn fan_json_parser_never_panics(s in "[\\[\\]{}\",:0-9a-z/ -]{0,80}") {
        let _ = parse_fan_json(&s, None);
    }
}
