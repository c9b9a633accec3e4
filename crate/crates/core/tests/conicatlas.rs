use std::collections::{BTreeMap, BTreeSet};

use conicfan::conicatlas::{
    adjoint_data, b_stable_planes, build_entry, cone_from_spec, cone_notation, double_coset_table, entry_json, line_stabilizer,
    orbit_report, reducible_divisor_ray, table, AtlasError, TABLE_NAMES,
};
use conicfan::reference::{self, OrbitLabel};
use conicfan::rootcore::{cartan_matrix, CartanType, ParabolicSubset};
use conicfan::symdata::{FanFamily, Row};

fn ty(s: &str) -> CartanType {
    s.parse().unwrap()
}

fn family_rep(f: FanFamily) -> CartanType {
    ty(match f {
        FanFamily::BD => "D6",
        FanFamily::B3 => "B3",
        FanFamily::D4 => "D4",
        FanFamily::EF => "E6",
        FanFamily::G2 => "G2",
    })
}

#[test]
fn contact_node_neighbors_give_the_line_stabilizer() {
    for row in Row::ALL {
        let t = row.representative();
        let ad = adjoint_data(t).unwrap();
        let a = cartan_matrix(t);
        let nb: BTreeSet<usize> = (1..=t.rank).filter(|&k| k != ad.j0 && a[ad.j0 - 1][k - 1] != 0).collect();
        assert_eq!(nb, ad.neighbors, "{t}");
        assert_eq!(ParabolicSubset::new(nb), reference::line_stabilizer(row), "{t}");
        assert_eq!(line_stabilizer(&ad), reference::line_stabilizer(row), "{t}");
        assert_eq!(ad.j0, reference::contact_node(row));
        // 2n roots of grade 1 plus ρ itself
        let graded = ad.rd.roots().iter().filter(|r| ad.grade(r) > 0).count();
        assert_eq!(graded, 2 * ad.n + 1, "{t}");
    }
}

#[test]
fn planes_match_reference() {
    for row in Row::ALL {
        let t = row.representative();
        let ad = adjoint_data(t).unwrap();
        let got: Vec<(usize, Vec<usize>, bool)> = b_stable_planes(&ad)
            .unwrap()
            .into_iter()
            .map(|p| (p.beta, p.stabilizer.missing.iter().copied().collect(), p.in_z))
            .collect();
        assert_eq!(got, reference::b_stable_planes(t), "{t}");
    }
}

#[test]
fn double_cosets_by_row() {
    let got: Vec<usize> = double_coset_table().unwrap().into_iter().map(|(_, n)| n).collect();
    assert_eq!(got, vec![6, 4, 6, 6, 8, 4, 4, 4, 4, 2]);
}

#[test]
fn orbit_types_and_hasse_edges() {
    for f in FanFamily::ALL {
        let e = build_entry(family_rep(f)).unwrap();
        for hilb in [false, true] {
            let r = orbit_report(&e, hilb).unwrap();
            let want: BTreeMap<OrbitLabel, usize> = reference::type_counts(f, hilb).into_iter().collect();
            assert_eq!(r.counts, want, "{f:?} hilb={hilb}");
            let (c, h) = reference::orbit_counts(f);
            assert_eq!(r.nodes.len(), if hilb { h } else { c });
            assert!(r.dot.starts_with("digraph"));
        }
        let hasse: BTreeMap<(OrbitLabel, OrbitLabel), usize> =
            reference::hasse_edges(f).into_iter().map(|(a, b, n)| ((a, b), n)).collect();
        assert_eq!(orbit_report(&e, true).unwrap().edge_labels(), hasse, "{f:?}");
    }
}

#[test]
fn g2_is_a_chain() {
    let e = build_entry(ty("G2")).unwrap();
    let r = orbit_report(&e, true).unwrap();
    let mut by_dim: Vec<(usize, OrbitLabel)> = r.nodes.iter().map(|n| (n.dim, n.label)).collect();
    by_dim.sort();
    assert_eq!(by_dim, vec![(0, OrbitLabel::Twistor), (1, OrbitLabel::NPR), (2, OrbitLabel::NPD)]);
    assert_eq!(r.edges.len(), 2);
    assert_eq!(e.chow_fan.maximal(), e.hilb_fan.maximal());
}

#[test]
fn reducible_ray_matches_reference() {
    for f in FanFamily::ALL {
        let e = build_entry(family_rep(f)).unwrap();
        let ray = reducible_divisor_ray(&e).unwrap();
        let want = cone_from_spec(reference::reducible_ray(f), &e.rrd).unwrap();
        assert_eq!(want.cone.rays(), &[ray], "{f:?}");
    }
}

#[test]
fn chow_cone_and_notation_round_trip() {
    for f in FanFamily::ALL {
        let e = build_entry(family_rep(f)).unwrap();
        let chow = e.chow_fan.maximal();
        assert_eq!(chow.len(), 1);
        let want = cone_from_spec(reference::chow_cone(f), &e.rrd).unwrap();
        assert_eq!(chow[0], &want);
        for c in e.hilb_fan.maximal() {
            let back = cone_from_spec(&cone_notation(c, &e.rrd), &e.rrd).unwrap();
            assert_eq!(&back, c);
        }
    }
}

#[test]
fn entry_json_has_all_keys() {
    let e = build_entry(ty("B3")).unwrap();
    let v = entry_json(&e).unwrap();
    let keys: BTreeSet<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, BTreeSet::from(["g", "j0", "n", "chow", "hilb", "orbits", "double_cosets"]));
    assert_eq!(v["double_cosets"], 4);
    assert_eq!(v["orbits"]["hilb"]["scheme"], "hilb");
    assert_eq!(v["chow"]["restricted"], "B3");
}

#[test]
fn tables() {
    let types = [ty("B3"), ty("G2")];
    for name in TABLE_NAMES {
        let t = table(name, &types).unwrap();
        assert!(!t.rows.is_empty(), "{name}");
        assert!(t.rows.iter().all(|r| r.len() == t.headers.len()), "{name}");
    }
    assert!(matches!(table("nope", &types), Err(AtlasError::UnknownTable(_))));
    let cos = table("cosets", &[ty("E8")]).unwrap();
    assert_eq!(cos.rows[0].last().unwrap(), "4");
}

#[test]
fn unsupported_types() {
    assert!(adjoint_data(ty("A4")).is_err());
    assert!(build_entry(ty("C3")).is_err());
}
