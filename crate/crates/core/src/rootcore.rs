//! Root data in Onishchik–Vinberg (OV) numbering, Weyl group actions,
//! coset orbits and double coset counts.
//!
//! Public functions take simple roots by their 1-based node label. A root or
//! weight in root coordinates is a vector of coefficients on the simple roots,
//! indexed by position (label order).
//!
//! OV layouts of the exceptional diagrams:
//!
//! * `E6`: chain 1-2-3-4-5, node 6 on 3
//! * `E7`: chain 1-2-3-4-5-6, node 7 on 4
//! * `E8`: chain 1-2-3-4-5-6-7, node 8 on 5
//! * `F4`: 1-2=>3-4 with 1, 2 short
//! * `G2`: 1 short, 2 long

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qmath::{q, Q, QVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("invalid Cartan type {0}")]
    InvalidType(String),
    #[error("no simple root with label {0}")]
    UnknownNode(usize),
    #[error("matrix is not a Cartan matrix of finite type")]
    NotFiniteType,
    #[error("operation needs an irreducible root datum")]
    Reducible,
    #[error("orbit exceeds the cap of {cap} weights")]
    OrbitTooLarge { cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self, RootError> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(Self { series, rank })
        } else {
            Err(RootError::InvalidType(format!("{series:?}{rank}")))
        }
    }

    /// `|W|` from the classical formulas.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.series {
            Series::A => fact(n + 1),
            Series::B | Series::C => (1u128 << n) * fact(n),
            Series::D => (1u128 << (n - 1)) * fact(n),
            Series::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Series::F => 1152,
            Series::G => 12,
        }
    }

    /// Rewrites low-rank coincidences so that isomorphic types compare equal:
    /// `B1 = C1 = A1`, `C2 = B2`, `D2 = A1 + A1`, `D3 = A3`.
    pub fn canonical(&self) -> Vec<CartanType> {
        let a = |r| CartanType { series: Series::A, rank: r };
        match (self.series, self.rank) {
            (Series::B | Series::C, 1) => vec![a(1)],
            (Series::C, 2) => vec![CartanType { series: Series::B, rank: 2 }],
            (Series::D, 2) => vec![a(1), a(1)],
            (Series::D, 3) => vec![a(3)],
            _ => vec![*self],
        }
    }

    /// Parses a possibly degenerate name such as `D3` or `B1` without validation,
    /// then canonicalizes it.
    pub fn parse_loose(s: &str) -> Result<Vec<CartanType>, RootError> {
        let (series, rank) = split_name(s)?;
        if rank == 0 {
            return Err(RootError::InvalidType(s.to_string()));
        }
        let t = CartanType { series, rank };
        match (series, rank) {
            (Series::B | Series::C, 1) | (Series::C, 2) | (Series::D, 2) | (Series::D, 3) => Ok(t.canonical()),
            _ => Ok(vec![CartanType::new(series, rank)?]),
        }
    }
}

fn split_name(s: &str) -> Result<(Series, usize), RootError> {
    let s = s.trim();
    let mut chars = s.chars();
    let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
        Some('A') => Series::A,
        Some('B') => Series::B,
        Some('C') => Series::C,
        Some('D') => Series::D,
        Some('E') => Series::E,
        Some('F') => Series::F,
        Some('G') => Series::G,
        _ => return Err(RootError::InvalidType(s.to_string())),
    };
    let rest = chars.as_str().trim_start_matches('_');
    let rank: usize = rest.parse().map_err(|_| RootError::InvalidType(s.to_string()))?;
    Ok((series, rank))
}

impl FromStr for CartanType {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (series, rank) = split_name(s)?;
        CartanType::new(series, rank)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.series, self.rank)
    }
}

/// Formats a multiset of types as `B2+A1+A1`, largest first.
pub fn format_types(types: &[CartanType]) -> String {
    let mut t = types.to_vec();
    t.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.series.cmp(&b.series)));
    t.iter().map(ToString::to_string).collect::<Vec<_>>().join("+")
}

/// The Cartan matrix `A[i][j] = <α_i | α_j> = 2(α_i, α_j)/(α_j, α_j)` in OV numbering.
pub fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match t.series {
        Series::A | Series::B | Series::C => {
            for i in 1..n {
                link(i, i + 1);
            }
        }
        Series::D => {
            for i in 1..n - 1 {
                link(i, i + 1);
            }
            link(n - 2, n);
        }
        Series::E => {
            for i in 1..n - 1 {
                link(i, i + 1);
            }
            let branch = match n {
                6 => 3,
                7 => 4,
                _ => 5,
            };
            link(branch, n);
        }
        Series::F => {
            link(1, 2);
            link(2, 3);
            link(3, 4);
        }
        Series::G => link(1, 2),
    }
    match t.series {
        Series::B => a[n - 2][n - 1] = -2,
        Series::C => a[n - 1][n - 2] = -2,
        // α2 short, α3 long
        Series::F => a[2][1] = -2,
        // α1 short, α2 long
        Series::G => a[1][0] = -3,
        _ => {}
    }
    a
}

/// Relative squared lengths `s_i` with `A[i][j] s_j = A[j][i] s_i`, normalized
/// so that the shortest root in each component has `s = 1`.
fn symmetrizer(cartan: &[Vec<i64>], nodes: &[usize]) -> Option<Vec<Q>> {
    let mut s: HashMap<usize, Q> = HashMap::new();
    let start = *nodes.first()?;
    s.insert(start, Q::one());
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        for &j in nodes {
            if j != i && cartan[i][j] != 0 {
                if cartan[j][i] == 0 {
                    return None;
                }
                let sj = &s[&i] * q(cartan[j][i]) / q(cartan[i][j]);
                match s.get(&j) {
                    Some(old) if *old != sj => return None,
                    Some(_) => {}
                    None => {
                        s.insert(j, sj);
                        queue.push_back(j);
                    }
                }
            }
        }
    }
    let min = s.values().min()?.clone();
    Some(nodes.iter().map(|j| &s[j] / &min).collect())
}

/// Identifies the type of a connected Cartan matrix restricted to `nodes`.
fn classify(cartan: &[Vec<i64>], nodes: &[usize]) -> Result<CartanType, RootError> {
    let n = nodes.len();
    let lens = symmetrizer(cartan, nodes).ok_or(RootError::NotFiniteType)?;
    let mut edges = Vec::new();
    let mut degree = vec![0usize; n];
    for a in 0..n {
        for b in a + 1..n {
            let (i, j) = (nodes[a], nodes[b]);
            let m = cartan[i][j] * cartan[j][i];
            if m != 0 {
                if !(1..=3).contains(&m) {
                    return Err(RootError::NotFiniteType);
                }
                edges.push((a, b, m));
                degree[a] += 1;
                degree[b] += 1;
            }
        }
    }
    if edges.len() + 1 != n {
        return Err(RootError::NotFiniteType);
    }
    let ty = |series, rank| CartanType::new(series, rank);
    if n == 1 {
        return ty(Series::A, 1);
    }
    let multiple: Vec<_> = edges.iter().filter(|e| e.2 > 1).collect();
    if multiple.len() > 1 || degree.iter().any(|&d| d > 3) {
        return Err(RootError::NotFiniteType);
    }
    if let Some(&&(a, b, m)) = multiple.first() {
        if degree.iter().any(|&d| d > 2) {
            return Err(RootError::NotFiniteType);
        }
        if m == 3 {
            return if n == 2 { ty(Series::G, 2) } else { Err(RootError::NotFiniteType) };
        }
        if n == 2 {
            return ty(Series::B, 2);
        }
        let ends_at_leaf = degree[a] == 1 || degree[b] == 1;
        if !ends_at_leaf {
            return if n == 4 { ty(Series::F, 4) } else { Err(RootError::NotFiniteType) };
        }
        let short = lens.iter().filter(|l| l.is_one()).count();
        return if short == 1 { ty(Series::B, n) } else { ty(Series::C, n) };
    }
    let branch: Vec<usize> = (0..n).filter(|&i| degree[i] == 3).collect();
    match branch.len() {
        0 => ty(Series::A, n),
        1 => {
            let c = branch[0];
            let mut arms = Vec::new();
            for &(a, b, _) in &edges {
                let start = if a == c {
                    b
                } else if b == c {
                    a
                } else {
                    continue;
                };
                let (mut prev, mut cur, mut len) = (c, start, 1);
                loop {
                    let next = edges.iter().find_map(|&(x, y, _)| {
                        if x == cur && y != prev {
                            Some(y)
                        } else if y == cur && x != prev {
                            Some(x)
                        } else {
                            None
                        }
                    });
                    match next {
                        Some(nx) => {
                            prev = cur;
                            cur = nx;
                            len += 1;
                        }
                        None => break,
                    }
                }
                arms.push(len);
            }
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => ty(Series::D, n),
                [1, 2, 2] => ty(Series::E, 6),
                [1, 2, 3] => ty(Series::E, 7),
                [1, 2, 4] => ty(Series::E, 8),
                _ => Err(RootError::NotFiniteType),
            }
        }
        _ => Err(RootError::NotFiniteType),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub kind: CartanType,
    /// Node labels of the component.
    pub labels: Vec<usize>,
}

/// A parabolic subgroup `P_I` recorded by its set `I` of missing simple roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default)]
pub struct ParabolicSubset {
    pub missing: BTreeSet<usize>,
}

impl ParabolicSubset {
    pub fn new<I: IntoIterator<Item = usize>>(missing: I) -> Self {
        Self { missing: missing.into_iter().collect() }
    }

    /// `P_I ∩ P_J = P_{I ∪ J}`.
    pub fn intersect(&self, other: &ParabolicSubset) -> ParabolicSubset {
        Self { missing: self.missing.union(&other.missing).copied().collect() }
    }
}

impl fmt::Display for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.missing.iter().map(ToString::to_string).collect();
        write!(f, "P_{{{}}}", s.join(","))
    }
}

/// A word in the simple reflections, given by labels; `word[0]` acts first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylWord(pub Vec<usize>);

#[derive(Debug, Clone)]
pub struct RootDatum {
    labels: Vec<usize>,
    cartan: Vec<Vec<i64>>,
    components: Vec<Component>,
    roots: Vec<Vec<i64>>,
    npos: usize,
    index: HashMap<Vec<i64>, usize>,
    killing: Vec<QVec>,
}

/// The Killing-dual inner product of the root datum restricted to `t*`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonDebug {
    pub roots: Vec<Vec<i64>>,
    pub cartan: Vec<Vec<i64>>,
    pub killing: Vec<Vec<String>>,
}

/// Builds the root datum of a simple type in OV numbering.
pub fn build_root_datum(t: CartanType) -> RootDatum {
    RootDatum::from_cartan(cartan_matrix(t), (1..=t.rank).collect()).expect("OV Cartan matrices are of finite type")
}

impl RootDatum {
    /// A root datum from a (possibly block diagonal) Cartan matrix; `labels`
    /// names the nodes.
    pub fn from_cartan(cartan: Vec<Vec<i64>>, labels: Vec<usize>) -> Result<Self, RootError> {
        let n = cartan.len();
        if labels.len() != n || cartan.iter().any(|r| r.len() != n) {
            return Err(RootError::NotFiniteType);
        }
        if (0..n).any(|i| cartan[i][i] != 2) {
            return Err(RootError::NotFiniteType);
        }
        // components by connectivity
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut nodes = vec![s];
            seen[s] = true;
            let mut k = 0;
            while k < nodes.len() {
                let i = nodes[k];
                for j in 0..n {
                    if !seen[j] && (cartan[i][j] != 0 || cartan[j][i] != 0) {
                        seen[j] = true;
                        nodes.push(j);
                    }
                }
                k += 1;
            }
            nodes.sort_unstable();
            let kind = classify(&cartan, &nodes)?;
            components.push(Component { kind, labels: nodes.iter().map(|&i| labels[i]).collect() });
        }
        let mut rd = RootDatum {
            labels,
            cartan,
            components,
            roots: vec![],
            npos: 0,
            index: HashMap::new(),
            killing: vec![],
        };
        rd.close_roots();
        rd.compute_killing();
        Ok(rd)
    }

    fn close_roots(&mut self) {
        let n = self.rank();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..n {
                let w = self.reflect_pos(&v, i);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let mut pos: Vec<Vec<i64>> = seen.into_iter().filter(|v| v.iter().all(|&c| c >= 0)).collect();
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let negs: Vec<Vec<i64>> = pos.iter().map(|v| v.iter().map(|c| -c).collect()).collect();
        self.npos = pos.len();
        self.roots = pos.into_iter().chain(negs).collect();
        self.index = self.roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    }

    fn compute_killing(&mut self) {
        let n = self.rank();
        // κ(α_i∨, α_j∨) = Σ_γ <γ, α_i∨><γ, α_j∨>
        let mut kc = vec![vec![0i64; n]; n];
        for r in &self.roots {
            let p: Vec<i64> = (0..n).map(|i| self.pairing_pos(r, i)).collect();
            for i in 0..n {
                for j in 0..n {
                    kc[i][j] += p[i] * p[j];
                }
            }
        }
        self.killing = (0..n)
            .map(|i| (0..n).map(|j| q(4 * kc[i][j]) / (q(kc[i][i]) * q(kc[j][j]))).collect())
            .collect();
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_simple(&self) -> bool {
        self.components.len() == 1
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `(α_i, α_j)` for the Killing form.
    pub fn killing(&self) -> &[QVec] {
        &self.killing
    }

    /// All roots: positive roots by height then lexicographically, followed by
    /// their negatives in the same order.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots[..self.npos]
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    /// Index of the negative of root `i`.
    pub fn negate_index(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    /// Position of the node with the given label.
    pub fn pos(&self, label: usize) -> Result<usize, RootError> {
        self.labels.iter().position(|&l| l == label).ok_or(RootError::UnknownNode(label))
    }

    pub fn simple_root(&self, label: usize) -> Result<Vec<i64>, RootError> {
        let p = self.pos(label)?;
        let mut e = vec![0; self.rank()];
        e[p] = 1;
        Ok(e)
    }

    fn pairing_pos(&self, v: &[i64], i: usize) -> i64 {
        v.iter().zip(&self.cartan).map(|(c, row)| c * row[i]).sum()
    }

    fn reflect_pos(&self, v: &[i64], i: usize) -> Vec<i64> {
        let p = self.pairing_pos(v, i);
        let mut w = v.to_vec();
        w[i] -= p;
        w
    }

    /// `<v | α_label> = 2(v, α)/(α, α)`.
    pub fn pairing(&self, v: &[i64], label: usize) -> Result<i64, RootError> {
        Ok(self.pairing_pos(v, self.pos(label)?))
    }

    pub fn pairing_q(&self, v: &[Q], label: usize) -> Result<Q, RootError> {
        let i = self.pos(label)?;
        Ok(v.iter().zip(&self.cartan).fold(Q::zero(), |acc, (c, row)| acc + c * q(row[i])))
    }

    /// Killing inner product of two vectors in root coordinates.
    pub fn inner(&self, u: &[Q], v: &[Q]) -> Q {
        let mut s = Q::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() {
                    s += ui * vj * &self.killing[i][j];
                }
            }
        }
        s
    }

    pub fn inner_int(&self, u: &[i64], v: &[i64]) -> Q {
        self.inner(&crate::qmath::qvec(u), &crate::qmath::qvec(v))
    }

    /// `s_label(v)` for an integral vector in root coordinates.
    pub fn reflect(&self, v: &[i64], label: usize) -> Result<Vec<i64>, RootError> {
        Ok(self.reflect_pos(v, self.pos(label)?))
    }

    pub fn reflect_q(&self, v: &[Q], label: usize) -> Result<QVec, RootError> {
        let i = self.pos(label)?;
        let p = self.pairing_q(v, label)?;
        let mut w = v.to_vec();
        w[i] -= p;
        Ok(w)
    }

    pub fn weyl_apply(&self, word: &WeylWord, v: &[i64]) -> Result<Vec<i64>, RootError> {
        let mut w = v.to_vec();
        for &l in &word.0 {
            w = self.reflect(&w, l)?;
        }
        Ok(w)
    }

    pub fn weyl_apply_q(&self, word: &WeylWord, v: &[Q]) -> Result<QVec, RootError> {
        let mut w = v.to_vec();
        for &l in &word.0 {
            w = self.reflect_q(&w, l)?;
        }
        Ok(w)
    }

    pub fn height(v: &[i64]) -> i64 {
        v.iter().sum()
    }

    /// The highest root of an irreducible datum.
    pub fn highest_root(&self) -> Result<Vec<i64>, RootError> {
        if !self.is_simple() {
            return Err(RootError::Reducible);
        }
        Ok(self.roots[self.npos - 1].clone())
    }

    /// Reduced word for `w0`, found by descending from the strictly dominant weight `ρ_W`.
    pub fn longest_element(&self) -> WeylWord {
        let n = self.rank();
        let mut lam = vec![1i64; n];
        let mut word = Vec::new();
        while let Some(i) = (0..n).find(|&i| lam[i] > 0) {
            self.reflect_dynkin(&mut lam, i);
            word.push(self.labels[i]);
        }
        WeylWord(word)
    }

    /// `s_i` acting on Dynkin labels (coordinates on fundamental weights).
    fn reflect_dynkin(&self, lam: &mut [i64], i: usize) {
        let c = lam[i];
        if c != 0 {
            for (j, l) in lam.iter_mut().enumerate() {
                *l -= c * self.cartan[i][j];
            }
        }
    }

    /// `θ = −w0` as a permutation of node labels.
    pub fn duality_involution(&self) -> HashMap<usize, usize> {
        let w0 = self.longest_element();
        let mut out = HashMap::new();
        for &l in &self.labels {
            let img = self.weyl_apply(&w0, &self.simple_root(l).unwrap()).unwrap();
            let p = img.iter().position(|&c| c == -1).expect("w0 maps simple roots to negative simple roots");
            out.insert(l, self.labels[p]);
        }
        out
    }

    pub fn theta_set(&self, s: &BTreeSet<usize>) -> BTreeSet<usize> {
        let th = self.duality_involution();
        s.iter().map(|l| th[l]).collect()
    }

    /// Sub-datum on the given node labels, keeping the labels.
    pub fn subdatum(&self, labels: &[usize]) -> Result<RootDatum, RootError> {
        let pos: Vec<usize> = labels.iter().map(|&l| self.pos(l)).collect::<Result<_, _>>()?;
        let cartan = pos.iter().map(|&i| pos.iter().map(|&j| self.cartan[i][j]).collect()).collect();
        RootDatum::from_cartan(cartan, labels.to_vec())
    }

    /// The Weyl orbit of `Σ_{i∈I} ω_i`, i.e. `W/W_P` for `P = P_I`, as Dynkin labels.
    pub fn coset_orbit(&self, p: &ParabolicSubset, cap: usize) -> Result<Vec<Vec<i64>>, RootError> {
        let n = self.rank();
        let mut lam = vec![0i64; n];
        for &l in &p.missing {
            lam[self.pos(l)?] = 1;
        }
        let mut seen: HashSet<Vec<i64>> = HashSet::from([lam.clone()]);
        let mut queue = VecDeque::from([lam]);
        while let Some(v) = queue.pop_front() {
            for i in 0..n {
                if v[i] == 0 {
                    continue;
                }
                let mut w = v.clone();
                self.reflect_dynkin(&mut w, i);
                if !seen.contains(&w) {
                    if seen.len() >= cap {
                        return Err(RootError::OrbitTooLarge { cap });
                    }
                    seen.insert(w.clone());
                    queue.push_back(w);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// `|W_Q \ W / W_Q|`, counted as `W_Q`-orbits on `W/W_Q`.
    pub fn double_coset_count(&self, qp: &ParabolicSubset, cap: usize) -> Result<usize, RootError> {
        let orbit = self.coset_orbit(qp, cap)?;
        let idx: HashMap<&Vec<i64>, usize> = orbit.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let gens: Vec<usize> = (0..self.rank()).filter(|&i| !qp.missing.contains(&self.labels[i])).collect();
        let mut parent: Vec<usize> = (0..orbit.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (k, v) in orbit.iter().enumerate() {
            for &i in &gens {
                let mut w = v.clone();
                self.reflect_dynkin(&mut w, i);
                let j = idx[&w];
                let (a, b) = (find(&mut parent, k), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        Ok((0..orbit.len()).filter(|&k| find(&mut parent, k) == k).count())
    }

    pub fn weyl_order(&self) -> u128 {
        self.components.iter().map(|c| c.kind.weyl_order()).product()
    }

    /// Labels adjacent to `label` in the Dynkin diagram.
    pub fn neighbors(&self, label: usize) -> Result<BTreeSet<usize>, RootError> {
        let i = self.pos(label)?;
        Ok((0..self.rank()).filter(|&j| j != i && self.cartan[i][j] != 0).map(|j| self.labels[j]).collect())
    }

    /// `true` when the simple root is long in its component.
    pub fn is_long(&self, label: usize) -> Result<bool, RootError> {
        let i = self.pos(label)?;
        let comp = self.components.iter().find(|c| c.labels.contains(&label)).unwrap();
        let max = comp
            .labels
            .iter()
            .map(|&l| self.killing[self.pos(l).unwrap()][self.pos(l).unwrap()].clone())
            .max()
            .unwrap();
        Ok(self.killing[i][i] == max)
    }

    /// Killing squared length of a root given in root coordinates.
    pub fn norm2(&self, v: &[i64]) -> Q {
        self.inner_int(v, v)
    }

    /// Extended Cartan matrix: node 0 is `−ρ`, nodes `1..=n` are the simple roots.
    pub fn extended_cartan(&self) -> Result<Vec<Vec<i64>>, RootError> {
        let rho = self.highest_root()?;
        let n = self.rank();
        let rq = crate::qmath::qvec(&rho);
        let rr = self.inner(&rq, &rq);
        let mut a = vec![vec![0i64; n + 1]; n + 1];
        a[0][0] = 2;
        for i in 0..n {
            for j in 0..n {
                a[i + 1][j + 1] = self.cartan[i][j];
            }
            a[0][i + 1] = -self.pairing_pos(&rho, i);
            let ai = &self.killing[i][i];
            let mut e = vec![Q::zero(); n];
            e[i] = Q::one();
            let x = q(-2) * self.inner(&e, &rq) / &rr;
            let _ = ai;
            a[i + 1][0] = crate::qmath::to_i64(&x).expect("integral pairing");
        }
        Ok(a)
    }

    pub fn to_json_debug(&self) -> JsonDebug {
        JsonDebug {
            roots: self.roots.clone(),
            cartan: self.cartan.clone(),
            killing: self.killing.iter().map(|r| r.iter().map(crate::qmath::fmt_q).collect()).collect(),
        }
    }
}

/// Canonical multiset of component types of `rd`.
pub fn component_types(rd: &RootDatum) -> Vec<CartanType> {
    let mut t: Vec<CartanType> = rd.components().iter().flat_map(|c| c.kind.canonical()).collect();
    t.sort();
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rd(s: &str) -> RootDatum {
        build_root_datum(s.parse().unwrap())
    }

    #[test]
    fn g2_roots() {
        let g = rd("G2");
        assert_eq!(g.roots().len(), 12);
        let pos: Vec<Vec<i64>> = g.positive_roots().to_vec();
        assert_eq!(pos, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1], vec![3, 1], vec![3, 2]]);
    }

    #[test]
    fn counts() {
        assert_eq!(rd("B3").roots().len(), 18);
        assert_eq!(rd("E8").roots().len(), 240);
        assert_eq!(rd("F4").roots().len(), 48);
        assert_eq!(rd("B4").highest_root().unwrap(), vec![1, 2, 2, 2]);
    }

    #[test]
    fn reflect_a2() {
        let a = rd("A2");
        assert_eq!(a.reflect(&[0, 1], 1).unwrap(), vec![1, 1]);
    }

    #[test]
    fn theta_e6() {
        let th = rd("E6").duality_involution();
        assert_eq!((th[&1], th[&2], th[&3], th[&6]), (5, 4, 3, 6));
    }

    #[test]
    fn orbits_and_double_cosets() {
        let a2 = rd("A2");
        assert_eq!(a2.coset_orbit(&ParabolicSubset::new([1]), 1000).unwrap().len(), 3);
        assert_eq!(rd("B3").coset_orbit(&ParabolicSubset::new([1]), 1000).unwrap().len(), 6);
        assert!(matches!(
            rd("E8").coset_orbit(&ParabolicSubset::new([4]), 10),
            Err(RootError::OrbitTooLarge { cap: 10 })
        ));
    }

    #[test]
    fn classify_types() {
        for name in ["A5", "B4", "C3", "D5", "E6", "E7", "E8", "F4", "G2", "B2"] {
            let t: CartanType = name.parse().unwrap();
            assert_eq!(build_root_datum(t).components()[0].kind, t, "{name}");
        }
    }

    #[test]
    fn reducible_rejects_highest_root() {
        let r = RootDatum::from_cartan(vec![vec![2, 0], vec![0, 2]], vec![1, 3]).unwrap();
        assert_eq!(r.highest_root(), Err(RootError::Reducible));
        assert_eq!(r.weyl_order(), 4);
    }

    #[test]
    fn names() {
        assert!("H3".parse::<CartanType>().is_err());
        assert!("E9".parse::<CartanType>().is_err());
        assert_eq!(CartanType::parse_loose("D3").unwrap(), vec![CartanType::new(Series::A, 3).unwrap()]);
    }
}
