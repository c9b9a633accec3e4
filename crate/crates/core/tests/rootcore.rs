use std::collections::{BTreeSet, HashMap, VecDeque};

use conicfan::conicatlas::adjoint_data;
use conicfan::reference;
use conicfan::rootcore::{build_root_datum, cartan_matrix, CartanType, ParabolicSubset, RootDatum, WeylWord};
use conicfan::symdata::Row;
use proptest::prelude::*;

fn ty(s: &str) -> CartanType {
    s.parse().unwrap()
}

/// Roots by closing the simple roots under simple reflections, written
/// directly from the Cartan matrix.
fn roots_by_closure(a: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let n = a.len();
    let mut seen = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    while let Some(v) = queue.pop_front() {
        if !seen.insert(v.clone()) {
            continue;
        }
        for i in 0..n {
            // s_i(v) = v − <v, α_i∨> α_i
            let p: i64 = (0..n).map(|k| v[k] * a[k][i]).sum();
            let mut w = v.clone();
            w[i] -= p;
            queue.push_back(w);
        }
    }
    seen
}

#[test]
fn root_sets_match_reflection_closure() {
    for s in ["A1", "A4", "B3", "B6", "C3", "D4", "D7", "E6", "E7", "E8", "F4", "G2"] {
        let t = ty(s);
        let rd = build_root_datum(t);
        let got: BTreeSet<Vec<i64>> = rd.roots().iter().cloned().collect();
        assert_eq!(got, roots_by_closure(&cartan_matrix(t)), "{s}");
        assert_eq!(rd.roots().len(), 2 * rd.num_positive());
    }
}

#[test]
fn highest_roots() {
    let rd = build_root_datum(ty("G2"));
    let rho = rd.highest_root().unwrap();
    assert_eq!(rho.iter().sum::<i64>(), 5);
    let e8 = build_root_datum(ty("E8"));
    assert_eq!(e8.highest_root().unwrap().iter().sum::<i64>(), 29);
}

/// Weyl group elements as integer matrices on fundamental-weight coordinates.
fn weyl_group(a: &[Vec<i64>]) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = a.len();
    let gens: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            // s_i(ω_j) = ω_j − δ_ij α_i, α_i = Σ_k A[i][k] ω_k; columns are images
            let mut m = vec![0i64; n * n];
            for j in 0..n {
                for k in 0..n {
                    let delta = i64::from(j == k);
                    let sub = if j == i { a[i][k] } else { 0 };
                    m[k * n + j] = delta - sub;
                }
            }
            m
        })
        .collect();
    let mul = |x: &[i64], y: &[i64]| -> Vec<i64> {
        let mut z = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                z[r * n + c] = (0..n).map(|k| x[r * n + k] * y[k * n + c]).sum();
            }
        }
        z
    };
    let mut id = vec![0; n * n];
    for i in 0..n {
        id[i * n + i] = 1;
    }
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut out = vec![];
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        if seen.insert(m.clone(), ()).is_some() {
            continue;
        }
        for g in &gens {
            queue.push_back(mul(g, &m));
        }
        out.push(m);
    }
    (out, gens)
}

/// `|W_Q \ W / W_Q|` by union-find over the whole group.
fn brute_double_cosets(rd: &RootDatum, q: &ParabolicSubset) -> usize {
    let a = rd.cartan().to_vec();
    let n = a.len();
    let (elems, gens) = weyl_group(&a);
    let index: HashMap<&Vec<i64>, usize> = elems.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let levi: Vec<usize> = (0..n).filter(|&i| !q.missing.contains(&rd.labels()[i])).collect();
    let mut parent: Vec<usize> = (0..elems.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mul = |x: &[i64], y: &[i64]| -> Vec<i64> {
        let mut z = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                z[r * n + c] = (0..n).map(|k| x[r * n + k] * y[k * n + c]).sum();
            }
        }
        z
    };
    for (i, m) in elems.iter().enumerate() {
        for &s in &levi {
            for j in [index[&mul(&gens[s], m)], index[&mul(m, &gens[s])]] {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    (0..elems.len()).filter(|&i| find(&mut parent, i) == i).count()
}

#[test]
fn double_cosets_against_full_weyl_group() {
    for row in Row::ALL {
        if row == Row::E8 {
            continue;
        }
        let ad = adjoint_data(row.representative()).unwrap();
        let fast = ad.pss.double_coset_count(&ad.q, 1 << 20).unwrap();
        assert_eq!(fast, brute_double_cosets(&ad.pss, &ad.q), "{row:?}");
        assert_eq!(fast, reference::double_cosets(row), "{row:?}");
    }
}

#[test]
fn e8_double_cosets_by_coset_orbits() {
    let ad = adjoint_data(ty("E8")).unwrap();
    // W(E7)/W(E6) has 56 cosets: the minuscule orbit
    assert_eq!(ad.pss.coset_orbit(&ad.q, 1 << 20).unwrap().len(), 56);
    assert_eq!(ad.pss.double_coset_count(&ad.q, 1 << 20).unwrap(), 4);
}

#[test]
fn parabolic_intersection_is_union_of_missing() {
    let a = ParabolicSubset::new([1, 3]);
    let b = ParabolicSubset::new([3, 4]);
    assert_eq!(a.intersect(&b), ParabolicSubset::new([1, 3, 4]));
}

#[test]
fn canonical_small_ranks() {
    assert_eq!(reference::canonical_types(&["D3".into()]), vec![ty("A3")]);
    assert_eq!(reference::canonical_types(&["B2".into(), "A1".into()]).len(), 2);
    assert!(CartanType::parse_loose("Q7").is_err());
}

const TYPES: [&str; 8] = ["B3", "B5", "D4", "D6", "E6", "E7", "F4", "G2"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_permute_roots(ti in 0..TYPES.len(), word in prop::collection::vec(0usize..8, 0..12)) {
        let rd = build_root_datum(ty(TYPES[ti]));
        let labels = rd.labels();
        let w = WeylWord(word.iter().map(|&k| labels[k % labels.len()]).collect());
        let image: BTreeSet<Vec<i64>> = rd.roots().iter().map(|r| rd.weyl_apply(&w, r).unwrap()).collect();
        let roots: BTreeSet<Vec<i64>> = rd.roots().iter().cloned().collect();
        prop_assert_eq!(image, roots);
    }

    #[test]
    fn reflections_preserve_norms(ti in 0..TYPES.len(), ri in 0usize..400, li in 0usize..8) {
        let rd = build_root_datum(ty(TYPES[ti]));
        let r = &rd.roots()[ri % rd.roots().len()];
        let l = rd.labels()[li % rd.rank()];
        let s = rd.reflect(r, l).unwrap();
        prop_assert_eq!(rd.norm2(r), rd.norm2(&s));
        prop_assert_eq!(rd.reflect(&s, l).unwrap(), r.clone());
    }

    #[test]
    fn coset_orbit_size_is_index(ti in 0..TYPES.len(), mask in 1u32..255) {
        let rd = build_root_datum(ty(TYPES[ti]));
        let missing: Vec<usize> = rd.labels().iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &l)| l).collect();
        prop_assume!(!missing.is_empty());
        let levi: Vec<usize> = rd.labels().iter().copied().filter(|l| !missing.contains(l)).collect();
        let wl = if levi.is_empty() { 1 } else { rd.subdatum(&levi).unwrap().weyl_order() };
        let orbit = rd.coset_orbit(&ParabolicSubset::new(missing), 1 << 22).unwrap();
        prop_assert_eq!(orbit.len() as u128, rd.weyl_order() / wl);
    }
}
