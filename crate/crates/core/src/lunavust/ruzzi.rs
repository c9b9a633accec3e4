//! Smoothness of a colored cone of a symmetric space (Ruzzi's criterion).
//!
//! Basis vectors live in `½·Z⟨λ∨⟩`; dual vectors are written in the
//! fundamental weights `π_i` of `R'_O` and must lie in twice the weight lattice.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{ColoredCone, Space};
use crate::qmath::{self, q, qf, Q, QVec};
use crate::rootcore::Series;

#[derive(Debug, Clone, Serialize)]
pub struct RuzziReport {
    pub smooth: bool,
    /// `R_{L,σ}` has only type A factors and `Σ(l_j + 1) ≤ rank`.
    pub condition1: bool,
    /// The primitive generators form a basis of `½·Z⟨λ∨⟩`.
    pub condition2: bool,
    /// A dual-basis indexing exists.
    pub condition3: bool,
    #[serde(skip)]
    pub basis: Vec<QVec>,
    #[serde(skip)]
    pub duals: Vec<QVec>,
    pub detail: String,
}

impl RuzziReport {
    fn fail(c1: bool, c2: bool, detail: String) -> Self {
        RuzziReport { smooth: false, condition1: c1, condition2: c2, condition3: false, basis: vec![], duals: vec![], detail }
    }
}

/// Factors of `R_{L,σ}` as chains of color indices.
fn factors(cc: &ColoredCone, space: &Space) -> Option<Vec<Vec<usize>>> {
    let labels: Vec<usize> = cc.colors.iter().copied().collect();
    if labels.is_empty() {
        return Some(vec![]);
    }
    let sub = space.rd.subdatum(&labels).ok()?;
    let mut out = Vec::new();
    for c in sub.components() {
        if c.kind.series != Series::A {
            return None;
        }
        // order along the chain starting at an end
        let nbr = |l: usize| sub.neighbors(l).unwrap();
        let start = *c.labels.iter().find(|&&l| nbr(l).len() <= 1)?;
        let mut chain = vec![start];
        while chain.len() < c.labels.len() {
            let last = *chain.last().unwrap();
            let next = nbr(last).into_iter().find(|x| !chain.contains(x))?;
            chain.push(next);
        }
        out.push(chain);
    }
    Some(out)
}

pub fn ruzzi_smooth(cc: &ColoredCone, space: &Space) -> RuzziReport {
    let m = space.m();
    let Some(facs) = factors(cc, space) else {
        return RuzziReport::fail(false, false, "R_L has a factor outside type A".into());
    };
    let c1 = facs.iter().map(|f| f.len() + 1).sum::<usize>() <= m;
    // condition 2: doubled primitive rays are a Z-basis
    let doubled = cc.cone.rays_q();
    let c2 = doubled.len() == m && qmath::det(&doubled).abs().is_one();
    if !c1 || !c2 {
        return RuzziReport::fail(c1, c2, format!("cone has {} rays in rank {m}", doubled.len()));
    }
    let basis: Vec<QVec> = doubled.iter().map(|v| qmath::scale(v, &qf(1, 2))).collect();
    let duals = qmath::inverse(&qmath::transpose(&basis)).expect("basis is invertible");
    condition3(&facs, c1, c2, basis, duals, space)
}

/// Checks conditions (2) and (3) for a supplied basis `B` and dual family `y`
/// (in any order) instead of the one derived from the rays of the cone.
pub fn ruzzi_with_basis(cc: &ColoredCone, space: &Space, basis: &[QVec], duals: &[QVec]) -> RuzziReport {
    let m = space.m();
    let Some(facs) = factors(cc, space) else {
        return RuzziReport::fail(false, false, "R_L has a factor outside type A".into());
    };
    let c1 = facs.iter().map(|f| f.len() + 1).sum::<usize>() <= m;
    if basis.len() != m || duals.len() != m || basis.iter().chain(duals).any(|v| v.len() != m) {
        return RuzziReport::fail(c1, false, format!("expected {m} basis and {m} dual vectors"));
    }
    let doubled: Vec<QVec> = basis.iter().map(|b| qmath::scale(b, &q(2))).collect();
    let integral = doubled.iter().flatten().all(|x| x.is_integer());
    let unimodular = integral && qmath::det(&doubled).abs().is_one();
    let spans = match super::QCone::new(m, &doubled) {
        Ok(c) => c == cc.cone,
        Err(_) => false,
    };
    let c2 = unimodular && spans;
    if !c2 {
        let why = if !unimodular { "basis is not a basis of the half coroot lattice" } else { "basis does not span the cone" };
        return RuzziReport::fail(c1, c2, why.into());
    }
    // match each y to the basis vector it is dual to
    let mut ordered: Vec<Option<QVec>> = vec![None; m];
    for y in duals {
        let vals: Vec<Q> = basis.iter().map(|b| qmath::dot(y, b)).collect();
        let ones: Vec<usize> = (0..m).filter(|&k| vals[k].is_one()).collect();
        let zeros = vals.iter().filter(|v| v.is_zero()).count();
        match ones.as_slice() {
            [k] if zeros == m - 1 && ordered[*k].is_none() => ordered[*k] = Some(y.clone()),
            _ => {
                return RuzziReport {
                    basis: basis.to_vec(),
                    ..RuzziReport::fail(c1, c2, "y is not the dual basis of B".into())
                }
            }
        }
    }
    let duals: Vec<QVec> = ordered.into_iter().map(Option::unwrap).collect();
    condition3(&facs, c1, c2, basis.to_vec(), duals, space)
}

fn condition3(facs: &[Vec<usize>], c1: bool, c2: bool, basis: Vec<QVec>, duals: Vec<QVec>, space: &Space) -> RuzziReport {
    let m = space.m();
    let even = duals.iter().flatten().all(|x| x.is_integer() && (x.numer() % 2u8).is_zero());
    // 3a: each λ_i∨/2 for a color is a basis vector
    let mut paired = vec![None; m];
    for f in facs {
        for &i in f {
            match basis.iter().position(|b| *b == space.color_point(i)) {
                Some(k) => paired[k] = Some(i),
                None => {
                    return RuzziReport {
                        basis,
                        duals,
                        ..RuzziReport::fail(c1, c2, format!("λ{i}∨/2 is not a basis vector"))
                    }
                }
            }
        }
    }
    let free: Vec<usize> = (0..m).filter(|&k| paired[k].is_none()).collect();
    let ok3b = even && assign_extras(facs, 0, &free, &mut vec![], &basis, &duals, space);
    let detail = if !even {
        "dual basis is not in the doubled weight lattice".into()
    } else if ok3b {
        "smooth".into()
    } else {
        "no indexing satisfies the dual-basis identities".into()
    };
    RuzziReport { smooth: c1 && c2 && ok3b, condition1: c1, condition2: c2, condition3: ok3b, detail, basis, duals }
}

/// `2ϖ_i` of the factor with simple roots `chain`, in `π` coordinates.
fn twice_fundamental(chain: &[usize], i: usize, space: &Space) -> QVec {
    let a: Vec<QVec> = chain.iter().map(|&x| chain.iter().map(|&y| q(space.rd.cartan()[x - 1][y - 1])).collect()).collect();
    let inv = qmath::inverse(&a).unwrap();
    let mut out = vec![Q::zero(); space.m()];
    for (k, &lk) in chain.iter().enumerate() {
        out = qmath::add(&out, &qmath::scale(&space.lambda(lk), &(&inv[i][k] * q(2))));
    }
    out
}

fn assign_extras(
    facs: &[Vec<usize>],
    j: usize,
    free: &[usize],
    used: &mut Vec<usize>,
    basis: &[QVec],
    duals: &[QVec],
    space: &Space,
) -> bool {
    if j == facs.len() {
        return true;
    }
    let dual_of = |i: usize| -> &QVec {
        let k = basis.iter().position(|b| *b == space.color_point(i)).unwrap();
        &duals[k]
    };
    for &e in free {
        if used.contains(&e) {
            continue;
        }
        let extra = &duals[e];
        for rev in [false, true] {
            let mut chain = facs[j].clone();
            if rev {
                chain.reverse();
            }
            let l = chain.len();
            let ok = chain.iter().enumerate().all(|(i, &root)| {
                let lhs = qmath::sub(dual_of(root), &qmath::scale(extra, &qf((i + 1) as i64, (l + 1) as i64)));
                lhs == twice_fundamental(&chain, i, space)
            });
            if ok {
                used.push(e);
                if assign_extras(facs, j + 1, free, used, basis, duals, space) {
                    return true;
                }
                used.pop();
            }
        }
    }
    false
}
