//! Exact feasibility of small linear systems by Fourier–Motzkin elimination.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::qmath::{self, Q, QVec};

/// A constraint `a·x ≤ b` (or `a·x = b` when used as an equality).
pub type Constraint = (QVec, Q);

fn normalize(c: &Constraint) -> Constraint {
    let Some(first) = c.0.iter().find(|x| !x.is_zero()) else {
        return c.clone();
    };
    let s = first.abs().recip();
    (qmath::scale(&c.0, &s), &c.1 * &s)
}

/// Is `{x ∈ Q^n : a·x = b for eqs, a·x ≤ b for ineqs}` nonempty?
pub fn feasible(n: usize, eqs: &[Constraint], ineqs: &[Constraint]) -> bool {
    let mut eqs: Vec<Constraint> = eqs.to_vec();
    let mut ineqs: Vec<Constraint> = ineqs.to_vec();
    debug_assert!(eqs.iter().chain(&ineqs).all(|c| c.0.len() == n));
    // substitute equalities away
    while let Some(e) = eqs.pop() {
        let Some(k) = (0..n).find(|&k| !e.0[k].is_zero()) else {
            if !e.1.is_zero() {
                return false;
            }
            continue;
        };
        let piv = e.0[k].clone();
        let elim = |c: &mut Constraint| {
            if !c.0[k].is_zero() {
                let f = &c.0[k] / &piv;
                for (x, y) in c.0.iter_mut().zip(&e.0) {
                    *x -= &f * y;
                }
                c.1 -= &f * &e.1;
            }
        };
        eqs.iter_mut().for_each(elim);
        ineqs.iter_mut().for_each(elim);
    }
    let mut set: BTreeSet<(Vec<Q>, Q)> = ineqs.iter().map(normalize).collect();
    for k in 0..n {
        let (mut pos, mut negs, mut rest) = (vec![], vec![], BTreeSet::new());
        for c in set {
            if c.0[k].is_positive() {
                pos.push(c);
            } else if c.0[k].is_negative() {
                negs.push(c);
            } else {
                rest.insert(c);
            }
        }
        for p in &pos {
            for m in &negs {
                // p: x_k + ... ≤ b1, m: -x_k + ... ≤ b2 after normalization
                let fp = p.0[k].abs().recip();
                let fm = m.0[k].abs().recip();
                let a: QVec = p.0.iter().zip(&m.0).map(|(x, y)| x * &fp + y * &fm).collect();
                let b = &p.1 * &fp + &m.1 * &fm;
                rest.insert(normalize(&(a, b)));
            }
        }
        set = rest;
        if set.iter().any(|c| qmath::is_zero(&c.0) && c.1.is_negative()) {
            return false;
        }
    }
    set.iter().all(|c| !c.1.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmath::{q, qvec};

    #[test]
    fn simple_systems() {
        // x ≥ 1, x ≤ 0
        assert!(!feasible(1, &[], &[(qvec(&[-1]), q(-1)), (qvec(&[1]), q(0))]));
        // x + y = 1, x ≥ 0, y ≥ 0
        assert!(feasible(2, &[(qvec(&[1, 1]), q(1))], &[(qvec(&[-1, 0]), q(0)), (qvec(&[0, -1]), q(0))]));
        // x = y, x ≥ 1, y ≤ 0
        assert!(!feasible(2, &[(qvec(&[1, -1]), q(0))], &[(qvec(&[-1, 0]), q(-1)), (qvec(&[0, 1]), q(0))]));
    }
}
