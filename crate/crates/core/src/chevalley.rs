//! Chevalley basis with exact structure constants, brackets, extremal
//! elements and the tangent cubic `v ↦ [v,[v,[v,e_ρ]]]` on the contact
//! hyperplane `D_o`.
//!
//! Normalization is the integral one: `[e_α, e_{−α}] = α∨` and
//! `N_{α,β} = ±(p+1)`. Signs are fixed by declaring `N > 0` on extraspecial
//! pairs, with positive roots ordered by height and then lexicographically.
//! The vanishing of the cubic does not depend on rescaling the root vectors:
//! a diagonal torus automorphism carries one normalization to another.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::conicatlas::AdjointData;
use crate::qmath::{self, q, qf, Q, QVec};
use crate::rootcore::RootDatum;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChevalleyError {
    #[error("v is not supported on the contact hyperplane: {0}")]
    OutsideContact(String),
    #[error("structure constant N({0}, {1}) is not integral")]
    NonIntegral(String, String),
    #[error("Jacobi identity fails on {0}")]
    Jacobi(String),
    #[error("ad_x is not nilpotent")]
    NotNilpotent,
    #[error("zero element")]
    Zero,
}

/// `N_{α,β}` for all ordered pairs of roots whose sum is a root.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    pub rd: RootDatum,
    n: HashMap<(usize, usize), i64>,
    /// Coroot `α∨` of each root in simple-coroot coordinates.
    coroots: Vec<Vec<i64>>,
    /// `α(α_i∨)` for each root and node.
    values: Vec<Vec<i64>>,
    norms: Vec<Q>,
}

/// `x = h + Σ c_α e_α`, `h` in simple-coroot coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LieElement {
    pub h: QVec,
    pub e: BTreeMap<usize, Q>,
}

impl LieElement {
    pub fn zero(rank: usize) -> Self {
        LieElement { h: vec![Q::zero(); rank], e: BTreeMap::new() }
    }

    pub fn root_vector(rank: usize, root: usize, c: Q) -> Self {
        let mut x = Self::zero(rank);
        x.add_root(root, c);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.e.is_empty() && qmath::is_zero(&self.h)
    }

    fn add_root(&mut self, root: usize, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.e.entry(root).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.e.remove(&root);
        }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        out.h = qmath::add(&out.h, &other.h);
        for (&r, c) in &other.e {
            out.add_root(r, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> LieElement {
        if c.is_zero() {
            return Self::zero(self.h.len());
        }
        LieElement { h: qmath::scale(&self.h, c), e: self.e.iter().map(|(&r, x)| (r, x * c)).collect() }
    }

    /// `Some(c)` when `self = c·x`.
    pub fn ratio_to(&self, x: &LieElement) -> Option<Q> {
        if self.is_zero() {
            return Some(Q::zero());
        }
        let (pivot_self, pivot_x) = match x.e.iter().next() {
            Some((r, c)) => (self.e.get(r).cloned().unwrap_or_else(Q::zero), c.clone()),
            None => {
                let i = x.h.iter().position(|c| !c.is_zero())?;
                (self.h[i].clone(), x.h[i].clone())
            }
        };
        let c = pivot_self / pivot_x;
        (x.scale(&c) == *self).then_some(c)
    }
}

impl StructureConstants {
    pub fn build(rd: &RootDatum) -> Result<Self, ChevalleyError> {
        let roots = rd.roots();
        let rank = rd.rank();
        let norms: Vec<Q> = roots.iter().map(|r| rd.norm2(r)).collect();
        let labels = rd.labels().to_vec();
        let values: Vec<Vec<i64>> =
            roots.iter().map(|r| labels.iter().map(|&l| rd.pairing(r, l).expect("known label")).collect()).collect();
        let simple_norms: Vec<Q> = (0..rank).map(|i| norms[rd.root_index(&unit(rank, i)).unwrap()].clone()).collect();
        let mut coroots = Vec::with_capacity(roots.len());
        for (r, nr) in roots.iter().zip(&norms) {
            let c: Vec<i64> = r
                .iter()
                .zip(&simple_norms)
                .map(|(&a, ns)| qmath::to_i64(&(q(a) * ns / nr)).expect("coroots are integral"))
                .collect();
            coroots.push(c);
        }
        let mut sc = StructureConstants { rd: rd.clone(), n: HashMap::new(), coroots, values, norms };
        sc.fill_positive()?;
        sc.fill_rest()?;
        Ok(sc)
    }

    pub fn rank(&self) -> usize {
        self.rd.rank()
    }

    pub fn dim(&self) -> usize {
        self.rank() + self.rd.roots().len()
    }

    fn idx(&self, v: &[i64]) -> Option<usize> {
        self.rd.root_index(v)
    }

    fn sum_idx(&self, a: usize, b: usize) -> Option<usize> {
        let r = self.rd.roots();
        let s: Vec<i64> = r[a].iter().zip(&r[b]).map(|(x, y)| x + y).collect();
        self.idx(&s)
    }

    fn is_positive(&self, a: usize) -> bool {
        a < self.rd.num_positive()
    }

    fn fill_positive(&mut self) -> Result<(), ChevalleyError> {
        let npos = self.rd.num_positive();
        for xi in 0..npos {
            let mut pairs = Vec::new();
            for a in 0..xi {
                for b in (a + 1)..xi {
                    if self.sum_idx(a, b) == Some(xi) {
                        pairs.push((a, b));
                    }
                }
            }
            let Some(&(a0, b0)) = pairs.first() else { continue };
            let ext = self.string_p(a0, b0) + 1;
            self.n.insert((a0, b0), ext);
            self.n.insert((b0, a0), -ext);
            for &(a, b) in &pairs[1..] {
                // four-term relation on (a, b, −a0, −b0)
                let (na0, nb0) = (self.rd.negate_index(a0), self.rd.negate_index(b0));
                let t1 = match self.sum_idx(b, na0) {
                    Some(s) => self.mixed(b, na0)? * self.mixed(a, nb0)? / &self.norms[s],
                    None => Q::zero(),
                };
                let t2 = match self.sum_idx(na0, a) {
                    Some(s) => self.mixed(na0, a)? * self.mixed(b, nb0)? / &self.norms[s],
                    None => Q::zero(),
                };
                let val = -(&self.norms[xi]) / q(-ext) * (t1 + t2);
                let v = qmath::to_i64(&val).ok_or_else(|| self.non_integral(a, b))?;
                self.n.insert((a, b), v);
                self.n.insert((b, a), -v);
            }
        }
        Ok(())
    }

    /// `N` for a pair with at most one negative root, using only positive
    /// pairs of smaller height already in the table.
    fn mixed(&self, a: usize, b: usize) -> Result<Q, ChevalleyError> {
        if self.sum_idx(a, b).is_none() {
            return Ok(Q::zero());
        }
        if let Some(&v) = self.n.get(&(a, b)) {
            return Ok(q(v));
        }
        match (self.is_positive(a), self.is_positive(b)) {
            (true, true) => Ok(q(self.n[&(a, b)])),
            (false, false) => Ok(-self.mixed(self.rd.negate_index(a), self.rd.negate_index(b))?),
            (false, true) => Ok(-self.mixed(b, a)?),
            (true, false) => {
                let bp = self.rd.negate_index(b);
                let s = self.sum_idx(a, b).unwrap();
                if self.is_positive(s) {
                    // a − b' = ζ > 0: N_{a,−b'} = −(ζ,ζ)/(a,a)·N_{b',ζ}
                    Ok(-(&self.norms[s]) / &self.norms[a] * self.mixed(bp, s)?)
                } else {
                    // b' − a = ζ > 0: N_{a,−b'} = (ζ,ζ)/(b',b')·N_{ζ,a}
                    let z = self.rd.negate_index(s);
                    Ok(&self.norms[z] / &self.norms[bp] * self.mixed(z, a)?)
                }
            }
        }
    }

    fn fill_rest(&mut self) -> Result<(), ChevalleyError> {
        let nr = self.rd.roots().len();
        for a in 0..nr {
            for b in 0..nr {
                if self.n.contains_key(&(a, b)) || self.sum_idx(a, b).is_none() {
                    continue;
                }
                let v = qmath::to_i64(&self.mixed(a, b)?).ok_or_else(|| self.non_integral(a, b))?;
                self.n.insert((a, b), v);
            }
        }
        Ok(())
    }

    fn non_integral(&self, a: usize, b: usize) -> ChevalleyError {
        let r = self.rd.roots();
        ChevalleyError::NonIntegral(fmt_root(&r[a]), fmt_root(&r[b]))
    }

    /// Largest `p` with `β − pα` a root.
    pub fn string_p(&self, a: usize, b: usize) -> i64 {
        let r = self.rd.roots();
        let mut p = 0;
        loop {
            let v: Vec<i64> = r[b].iter().zip(&r[a]).map(|(x, y)| x - (p + 1) * y).collect();
            if self.idx(&v).is_none() {
                return p;
            }
            p += 1;
        }
    }

    /// `N_{α,β}`, zero when `α+β` is not a root.
    pub fn n(&self, a: usize, b: usize) -> i64 {
        self.n.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn n_roots(&self, alpha: &[i64], beta: &[i64]) -> Option<i64> {
        Some(self.n(self.idx(alpha)?, self.idx(beta)?))
    }

    pub fn coroot(&self, a: usize) -> &[i64] {
        &self.coroots[a]
    }

    pub fn root_of(&self, v: &[i64]) -> Option<usize> {
        self.idx(v)
    }

    pub fn e(&self, v: &[i64]) -> LieElement {
        LieElement::root_vector(self.rank(), self.idx(v).expect("a root"), Q::one())
    }

    /// Basis element `k`: simple coroots first, then root vectors in root order.
    pub fn basis(&self, k: usize) -> LieElement {
        let rank = self.rank();
        if k < rank {
            let mut x = LieElement::zero(rank);
            x.h[k] = Q::one();
            x
        } else {
            LieElement::root_vector(rank, k - rank, Q::one())
        }
    }

    /// `α(h)` for `h` in coroot coordinates.
    fn eval_root(&self, a: usize, h: &[Q]) -> Q {
        self.values[a].iter().zip(h).filter(|(_, c)| !c.is_zero()).fold(Q::zero(), |acc, (&v, c)| acc + c * q(v))
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let rank = self.rank();
        let mut out = LieElement::zero(rank);
        for (&a, ca) in &x.e {
            for (&b, cb) in &y.e {
                let c = ca * cb;
                if b == self.rd.negate_index(a) {
                    for (i, &k) in self.coroots[a].iter().enumerate() {
                        out.h[i] += &c * q(k);
                    }
                } else if let Some(s) = self.sum_idx(a, b) {
                    out.add_root(s, c * q(self.n(a, b)));
                }
            }
            out.add_root(a, -(ca * self.eval_root(a, &y.h)));
        }
        for (&b, cb) in &y.e {
            out.add_root(b, cb * self.eval_root(b, &x.h));
        }
        out
    }

    /// `ad_x^k(y)`, stopping early at zero.
    pub fn ad_power(&self, x: &LieElement, y: &LieElement, k: usize) -> LieElement {
        let mut z = y.clone();
        for _ in 0..k {
            if z.is_zero() {
                break;
            }
            z = self.bracket(x, &z);
        }
        z
    }

    /// `exp(ad_x)(y)` for nilpotent `ad_x`.
    pub fn exp_ad(&self, x: &LieElement, y: &LieElement) -> Result<LieElement, ChevalleyError> {
        let mut term = y.clone();
        let mut sum = y.clone();
        for k in 1..=self.dim() + 1 {
            term = self.bracket(x, &term).scale(&qf(1, k as i64));
            if term.is_zero() {
                return Ok(sum);
            }
            sum = sum.add(&term);
        }
        Err(ChevalleyError::NotNilpotent)
    }

    /// The automorphism `exp(ad e_i) exp(ad −f_i) exp(ad e_i)` lifting `s_i`.
    pub fn reflection_automorphism(&self, node: usize, x: &LieElement) -> Result<LieElement, ChevalleyError> {
        let rank = self.rank();
        let mut unit_root = vec![0; rank];
        unit_root[node] = 1;
        let e = self.e(&unit_root);
        let f = self.e(&unit_root.iter().map(|c| -c).collect::<Vec<_>>()).scale(&q(-1));
        let y = self.exp_ad(&e, x)?;
        let y = self.exp_ad(&f, &y)?;
        self.exp_ad(&e, &y)
    }

    /// `[x,[x,y]] ∈ span(x)` for every basis element `y`.
    pub fn is_extremal(&self, x: &LieElement) -> Result<bool, ChevalleyError> {
        if x.is_zero() {
            return Err(ChevalleyError::Zero);
        }
        for k in 0..self.dim() {
            let z = self.ad_power(x, &self.basis(k), 2);
            if z.ratio_to(x).is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `τ_c(e_α) = Π c_i^{α_i} e_α`, identity on the Cartan subalgebra.
    pub fn torus_act(&self, c: &[Q], x: &LieElement) -> LieElement {
        let mut out = LieElement { h: x.h.clone(), e: BTreeMap::new() };
        for (&a, v) in &x.e {
            out.e.insert(a, v * character(c, &self.rd.roots()[a]));
        }
        out
    }

    /// `[b_i, b_j]` on basis indices with integer coefficients.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        let rank = self.rank();
        match (i < rank, j < rank) {
            (true, true) => vec![],
            (true, false) => vec![(j, self.values[j - rank][i])],
            (false, true) => vec![(i, -self.values[i - rank][j])],
            (false, false) => {
                let (a, b) = (i - rank, j - rank);
                if b == self.rd.negate_index(a) {
                    self.coroots[a].iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (k, c)).collect()
                } else if let Some(s) = self.sum_idx(a, b) {
                    vec![(s + rank, self.n(a, b))]
                } else {
                    vec![]
                }
            }
        }
    }

    fn bracket_int(&self, x: &[(usize, i64)], y: &[(usize, i64)]) -> Vec<(usize, i64)> {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for &(i, ci) in x {
            for &(j, cj) in y {
                for (k, ck) in self.basis_bracket(i, j) {
                    *acc.entry(k).or_insert(0) += ci * cj * ck;
                }
            }
        }
        acc.into_iter().filter(|&(_, c)| c != 0).collect()
    }

    /// Jacobi identity on the basis triple `(i, j, k)`.
    pub fn jacobi_basis(&self, i: usize, j: usize, k: usize) -> bool {
        let t = |a: usize, b: usize, c: usize| self.bracket_int(&[(a, 1)], &self.bracket_int(&[(b, 1)], &[(c, 1)]));
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (x, c) in t(i, j, k).into_iter().chain(t(j, k, i)).chain(t(k, i, j)) {
            *acc.entry(x).or_insert(0) += c;
        }
        acc.values().all(|&c| c == 0)
    }

    /// Jacobi on all basis triples `i < j < k` and antisymmetry on all pairs.
    pub fn jacobi_exhaustive(&self) -> Result<usize, ChevalleyError> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let mut s = self.basis_bracket(i, j);
                let mut t: Vec<(usize, i64)> = self.basis_bracket(j, i).into_iter().map(|(k, c)| (k, -c)).collect();
                s.sort();
                t.sort();
                if s != t {
                    return Err(ChevalleyError::Jacobi(format!("antisymmetry on ({i}, {j})")));
                }
            }
        }
        let failures: Vec<(usize, usize, usize)> = (0..d)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut bad = Vec::new();
                for j in (i + 1)..d {
                    for k in (j + 1)..d {
                        if !self.jacobi_basis(i, j, k) {
                            bad.push((i, j, k));
                        }
                    }
                }
                bad
            })
            .collect();
        match failures.first() {
            Some(t) => Err(ChevalleyError::Jacobi(format!("basis triple {t:?}"))),
            None => Ok(d * (d - 1) * (d - 2) / 6),
        }
    }

    /// Jacobi on `samples` random basis triples.
    pub fn jacobi_sampled(&self, samples: usize, seed: u64) -> Result<usize, ChevalleyError> {
        let d = self.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let triples: Vec<(usize, usize, usize)> =
            (0..samples).map(|_| (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d))).collect();
        match triples.par_iter().find_first(|&&(i, j, k)| !self.jacobi_basis(i, j, k)) {
            Some(t) => Err(ChevalleyError::Jacobi(format!("basis triple {t:?}"))),
            None => Ok(samples),
        }
    }

    /// `(α, β, N)` rows for every pair with `α+β` a root.
    pub fn to_csv(&self) -> String {
        let r = self.rd.roots();
        let mut keys: Vec<&(usize, usize)> = self.n.keys().collect();
        keys.sort();
        let mut s = String::from("alpha,beta,n\n");
        for &(a, b) in keys {
            s.push_str(&format!("{},{},{}\n", fmt_root(&r[a]), fmt_root(&r[b]), self.n[&(a, b)]));
        }
        s
    }

    pub fn format(&self, x: &LieElement) -> String {
        let mut parts = Vec::new();
        for (i, c) in x.h.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("{}*h{}", qmath::fmt_q(c), self.rd.labels()[i]));
            }
        }
        for (&a, c) in &x.e {
            parts.push(format!("{}*e[{}]", qmath::fmt_q(c), fmt_root(&self.rd.roots()[a])));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn character(c: &[Q], root: &[i64]) -> Q {
    let mut x = Q::one();
    for (ci, &k) in c.iter().zip(root) {
        let p = ci.pow(k.unsigned_abs() as i32);
        x *= if k < 0 { p.recip() } else { p };
    }
    x
}

pub fn fmt_root(r: &[i64]) -> String {
    r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h: Vec<String> = self.h.iter().map(qmath::fmt_q).collect();
        let e: Vec<String> = self.e.iter().map(|(r, c)| format!("{r}:{}", qmath::fmt_q(c))).collect();
        write!(f, "h=[{}] e={{{}}}", h.join(" "), e.join(", "))
    }
}

/// `exp(t·ad e_{−ρ})` applied to `e_ρ`: `e_ρ + t[e_{−ρ},e_ρ] + (t²/2)·ad²_{e_{−ρ}}(e_ρ)`.
pub fn twistor_conic_sample(sc: &StructureConstants, ad: &AdjointData, t: &Q) -> LieElement {
    let er = sc.e(&ad.rho);
    let fr = sc.e(&ad.rho.iter().map(|c| -c).collect::<Vec<_>>());
    let one = sc.bracket(&fr, &er);
    let two = sc.bracket(&fr, &one);
    er.add(&one.scale(t)).add(&two.scale(&(t * t / q(2))))
}

fn check_contact(sc: &StructureConstants, ad: &AdjointData, v: &LieElement) -> Result<(), ChevalleyError> {
    if !qmath::is_zero(&v.h) {
        return Err(ChevalleyError::OutsideContact("nonzero Cartan part".into()));
    }
    for &a in v.e.keys() {
        let r = &sc.rd.roots()[a];
        if ad.grade(r) != -1 {
            return Err(ChevalleyError::OutsideContact(format!("root {}", fmt_root(r))));
        }
    }
    Ok(())
}

/// `[v,[v,e_ρ]]` for `v ∈ D_o`.
pub fn contact_quadratic(sc: &StructureConstants, ad: &AdjointData, v: &LieElement) -> Result<LieElement, ChevalleyError> {
    check_contact(sc, ad, v)?;
    Ok(sc.ad_power(v, &sc.e(&ad.rho), 2))
}

/// `[v,[v,[v,e_ρ]]]` for `v ∈ D_o`.
pub fn contact_cubic(sc: &StructureConstants, ad: &AdjointData, v: &LieElement) -> Result<LieElement, ChevalleyError> {
    check_contact(sc, ad, v)?;
    Ok(sc.ad_power(v, &sc.e(&ad.rho), 3))
}

/// Indices of the roots spanning `D_o`.
pub fn contact_indices(sc: &StructureConstants, ad: &AdjointData) -> Vec<usize> {
    (0..sc.rd.roots().len()).filter(|&a| ad.grade(&sc.rd.roots()[a]) == -1).collect()
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Witness {
    pub name: String,
    pub v: String,
    pub quadratic_zero: bool,
    pub cubic_zero: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq, Default)]
pub struct ContactCounts {
    pub samples: usize,
    pub quadratic_zero: usize,
    pub cubic_zero: usize,
    pub violations: usize,
    /// `quadratic = 0` but `cubic ≠ 0`; impossible, so always zero.
    pub easy_direction_failures: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ContactReport {
    pub g: String,
    pub seed: u64,
    pub contact_dim: usize,
    pub witnesses: Vec<Witness>,
    /// Elements with vanishing cubic and nonvanishing quadratic.
    pub violations: Vec<String>,
    pub counts: ContactCounts,
}

fn random_q(rng: &mut ChaCha8Rng) -> Q {
    let num = rng.gen_range(-20i64..=20);
    let den = rng.gen_range(1i64..=20);
    qf(num, den)
}

struct Classified {
    quadratic_zero: bool,
    cubic_zero: bool,
}

fn classify(sc: &StructureConstants, ad: &AdjointData, v: &LieElement) -> Classified {
    let er = sc.e(&ad.rho);
    let quad = sc.ad_power(v, &er, 2);
    let cubic = sc.bracket(v, &quad);
    Classified { quadratic_zero: quad.is_zero(), cubic_zero: cubic.is_zero() }
}

/// Tests `cubic = 0 ⟹ quadratic = 0` on the structured witnesses, on every
/// `e_a + c·e_b` with `a, b` in `D_o` and `c ∈ {±1, ±2, ±1/2}`, and on
/// `samples` random elements of `D_o`.
pub fn contact_implication_check(sc: &StructureConstants, ad: &AdjointData, samples: usize, seed: u64) -> ContactReport {
    let rank = sc.rank();
    let idx = contact_indices(sc, ad);
    let mut counts = ContactCounts::default();
    let mut violations = Vec::new();
    let record = |v: &LieElement, c: &Classified, counts: &mut ContactCounts, violations: &mut Vec<String>| {
        counts.samples += 1;
        counts.quadratic_zero += c.quadratic_zero as usize;
        counts.cubic_zero += c.cubic_zero as usize;
        if c.quadratic_zero && !c.cubic_zero {
            counts.easy_direction_failures += 1;
        }
        if c.cubic_zero && !c.quadratic_zero {
            counts.violations += 1;
            if violations.len() < 16 {
                violations.push(sc.format(v));
            }
        }
    };

    let mut witnesses = Vec::new();
    let mut neg_j0 = vec![0; rank];
    neg_j0[sc.rd.pos(ad.j0).expect("contact node")] = -1;
    let line = sc.e(&neg_j0);
    let c = classify(sc, ad, &line);
    witnesses.push(Witness { name: "e(-a_j0)".into(), v: sc.format(&line), quadratic_zero: c.quadratic_zero, cubic_zero: c.cubic_zero });
    for &a in &idx {
        let r = &sc.rd.roots()[a];
        if sc.norms[a] != *sc.norms.iter().max().unwrap() {
            continue;
        }
        let other: Vec<i64> = r.iter().zip(&ad.rho).map(|(x, p)| -x - p).collect();
        let v = sc.e(r).add(&sc.e(&other));
        let c = classify(sc, ad, &v);
        witnesses.push(Witness {
            name: format!("e[{}] + e[-a-rho]", fmt_root(r)),
            v: sc.format(&v),
            quadratic_zero: c.quadratic_zero,
            cubic_zero: c.cubic_zero,
        });
        break;
    }

    let scalars = [q(1), q(-1), q(2), q(-2), qf(1, 2), qf(-1, 2)];
    let mut structured = Vec::new();
    for (i, &a) in idx.iter().enumerate() {
        structured.push(LieElement::root_vector(rank, a, Q::one()));
        for &b in &idx[i + 1..] {
            for s in &scalars {
                let mut v = LieElement::root_vector(rank, a, Q::one());
                v.add_root(b, s.clone());
                structured.push(v);
            }
        }
    }
    let structured_results: Vec<Classified> = structured.par_iter().map(|v| classify(sc, ad, v)).collect();
    for (v, c) in structured.iter().zip(&structured_results) {
        record(v, c, &mut counts, &mut violations);
    }

    const CHUNK: usize = 256;
    let chunks = samples.div_ceil(CHUNK);
    let random: Vec<Vec<(LieElement, Classified)>> = (0..chunks)
        .into_par_iter()
        .map(|ch| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (ch as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let len = CHUNK.min(samples - ch * CHUNK);
            (0..len)
                .map(|_| {
                    let mut v = LieElement::zero(rank);
                    for &a in &idx {
                        v.add_root(a, random_q(&mut rng));
                    }
                    let c = classify(sc, ad, &v);
                    (v, c)
                })
                .collect()
        })
        .collect();
    for (v, c) in random.iter().flatten() {
        record(v, c, &mut counts, &mut violations);
    }

    ContactReport { g: ad.g.to_string(), seed, contact_dim: idx.len(), witnesses, violations, counts }
}

/// Largest absolute structure constant; 3 only for `G2`.
pub fn max_abs_n(sc: &StructureConstants) -> i64 {
    sc.n.values().map(|v| v.abs()).max().unwrap_or(0)
}
