//! Pointed polyhedral cones with exact rational generators.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::fm::{self, Constraint};
use super::FanError;
use crate::qmath::{self, q, Q, QVec};

/// A pointed cone given by its primitive extremal rays, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QCone {
    ambient: usize,
    rays: Vec<Vec<BigInt>>,
    dim: usize,
    basis: Vec<QVec>,
    /// Inward facet normals inside the span, with the rays lying on each facet.
    facets: Vec<(QVec, u64)>,
}

impl PartialOrd for QCone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QCone {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.dim, &self.rays).cmp(&(other.dim, &other.rays))
    }
}

pub const MAX_GENERATORS: usize = 24;

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Facets of the cone spanned by `gens` (all nonzero, pointed), inside `basis`.
fn facets_of(gens: &[QVec], basis: &[QVec]) -> Vec<(QVec, u64)> {
    let d = basis.len();
    if d == 0 {
        return vec![];
    }
    let mut out: Vec<(QVec, u64)> = Vec::new();
    for t in subsets(gens.len(), d - 1) {
        let rows: Vec<QVec> = t.iter().map(|&i| basis.iter().map(|b| qmath::dot(b, &gens[i])).collect()).collect();
        let ns = qmath::nullspace(&rows, d);
        if ns.len() != 1 {
            continue;
        }
        let mut n: QVec = vec![Q::zero(); gens[0].len()];
        for (c, b) in ns[0].iter().zip(basis) {
            n = qmath::add(&n, &qmath::scale(b, c));
        }
        let vals: Vec<Q> = gens.iter().map(|g| qmath::dot(g, &n)).collect();
        let n = if vals.iter().all(|v| !v.is_negative()) {
            n
        } else if vals.iter().all(|v| !v.is_positive()) {
            qmath::neg(&n)
        } else {
            continue;
        };
        let n = qmath::int_to_q(&qmath::primitive(&n));
        let mask = vals.iter().enumerate().filter(|(_, v)| v.is_zero()).fold(0u64, |m, (i, _)| m | (1 << i));
        if !out.iter().any(|(m, _)| *m == n) {
            out.push((n, mask));
        }
    }
    out
}

impl QCone {
    pub fn zero(ambient: usize) -> Self {
        QCone { ambient, rays: vec![], dim: 0, basis: vec![], facets: vec![] }
    }

    pub fn new(ambient: usize, gens: &[QVec]) -> Result<Self, FanError> {
        if gens.iter().any(|g| g.len() != ambient) {
            return Err(FanError::Dimension { expected: ambient });
        }
        let mut prim: Vec<Vec<BigInt>> = gens.iter().filter(|g| !qmath::is_zero(g)).map(|g| qmath::primitive(g)).collect();
        prim.sort();
        prim.dedup();
        if prim.len() > MAX_GENERATORS {
            return Err(FanError::TooLarge);
        }
        if prim.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let g: Vec<QVec> = prim.iter().map(|p| qmath::int_to_q(p)).collect();
        // pointed iff some x has g·x ≥ 1 on every generator
        let ineqs: Vec<Constraint> = g.iter().map(|v| (qmath::neg(v), q(-1))).collect();
        if !fm::feasible(ambient, &[], &ineqs) {
            return Err(FanError::NotPointed);
        }
        let (basis, _) = qmath::rref(&g);
        let d = basis.len();
        let facets = facets_of(&g, &basis);
        let extremal: Vec<usize> = (0..g.len())
            .filter(|&i| {
                if d == 1 {
                    return true;
                }
                let normals: Vec<QVec> = facets.iter().filter(|(_, m)| m & (1 << i) != 0).map(|(n, _)| n.clone()).collect();
                qmath::rank(&normals) == d - 1
            })
            .collect();
        let rays: Vec<Vec<BigInt>> = extremal.iter().map(|&i| prim[i].clone()).collect();
        let rq: Vec<QVec> = rays.iter().map(|p| qmath::int_to_q(p)).collect();
        let facets = facets_of(&rq, &basis);
        Ok(QCone { ambient, rays, dim: d, basis, facets })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn rays_q(&self) -> Vec<QVec> {
        self.rays.iter().map(|r| qmath::int_to_q(r)).collect()
    }

    pub fn is_full(&self) -> bool {
        self.dim == self.ambient
    }

    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.dim
    }

    pub fn facet_normals(&self) -> Vec<QVec> {
        self.facets.iter().map(|(n, _)| n.clone()).collect()
    }

    /// Equalities cutting out the linear span.
    pub fn span_equations(&self) -> Vec<QVec> {
        qmath::nullspace(&self.basis, self.ambient)
    }

    pub fn contains(&self, p: &[Q]) -> bool {
        self.span_equations().iter().all(|e| qmath::dot(e, p).is_zero())
            && self.facets.iter().all(|(n, _)| !qmath::dot(n, p).is_negative())
    }

    /// Constraints whose solutions, up to positive scaling, are the relative interior.
    pub fn relint_constraints(&self) -> (Vec<Constraint>, Vec<Constraint>) {
        let eqs = self.span_equations().into_iter().map(|e| (e, Q::zero())).collect();
        let ineqs = self.facets.iter().map(|(n, _)| (qmath::neg(n), q(-1))).collect();
        (eqs, ineqs)
    }

    /// Every face, as a cone, including the zero cone and the cone itself.
    pub fn faces(&self) -> Vec<QCone> {
        let full: u64 = if self.rays.is_empty() { 0 } else { (1u64 << self.rays.len()) - 1 };
        let mut masks: Vec<u64> = vec![full];
        let mut frontier: Vec<u64> = self.facets.iter().map(|(_, m)| *m).collect();
        while let Some(m) = frontier.pop() {
            if masks.contains(&m) {
                continue;
            }
            masks.push(m);
            for (_, f) in &self.facets {
                let x = m & f;
                if !masks.contains(&x) {
                    frontier.push(x);
                }
            }
        }
        if self.dim > 0 && !masks.contains(&0) {
            masks.push(0);
        }
        let rq = self.rays_q();
        let mut out: Vec<QCone> = masks
            .into_iter()
            .map(|m| {
                let g: Vec<QVec> = (0..rq.len()).filter(|i| m & (1 << i) != 0).map(|i| rq[i].clone()).collect();
                QCone::new(self.ambient, &g).expect("faces of a pointed cone are pointed")
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Is `self` a face of `other`?
    pub fn is_face_of(&self, other: &QCone) -> bool {
        other.faces().contains(self)
    }
}
