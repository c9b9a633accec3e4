//! Small exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;
pub type QVec = Vec<Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qvec(v: &[i64]) -> QVec {
    v.iter().map(|&x| q(x)).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn scale(v: &[Q], c: &Q) -> QVec {
    v.iter().map(|x| x * c).collect()
}

pub fn add(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[Q]) -> QVec {
    a.iter().map(|x| -x).collect()
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Q::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Q::from_integer(n))
    }
}

/// The positive primitive integer vector on the ray through `v`.
/// The zero vector maps to itself.
pub fn primitive(v: &[Q]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn int_to_q(v: &[BigInt]) -> QVec {
    v.iter().map(|x| Q::from_integer(x.clone())).collect()
}

pub fn to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Row-reduces a copy of `rows` and returns the reduced nonzero rows with their pivot columns.
pub fn rref(rows: &[QVec]) -> (Vec<QVec>, Vec<usize>) {
    let mut m: Vec<QVec> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        m[r] = scale(&m[r], &inv);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[QVec]) -> usize {
    if rows.is_empty() {
        0
    } else {
        rref(rows).1.len()
    }
}

/// A basis of `{x : row·x = 0 for every row}` in dimension `n`.
pub fn nullspace(rows: &[QVec], n: usize) -> Vec<QVec> {
    let (red, pivots) = if rows.is_empty() { (vec![], vec![]) } else { rref(rows) };
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); n];
        v[free] = Q::one();
        for (row, &pc) in red.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        out.push(v);
    }
    out
}

pub fn det(m: &[QVec]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] * &inv;
                let row = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(&row) {
                    *x -= &f * y;
                }
            }
        }
    }
    d
}

pub fn inverse(m: &[QVec]) -> Option<Vec<QVec>> {
    let n = m.len();
    let aug: Vec<QVec> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn transpose(m: &[QVec]) -> Vec<QVec> {
    if m.is_empty() {
        return vec![];
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Solves `Σ c_k rows[k] = target`; `None` if `target` is outside the row span.
pub fn solve_combination(rows: &[QVec], target: &[Q]) -> Option<QVec> {
    let n = target.len();
    let k = rows.len();
    // unknowns c_0..c_{k-1}; equations one per coordinate
    let eqs: Vec<QVec> = (0..n)
        .map(|i| {
            let mut e: QVec = rows.iter().map(|r| r[i].clone()).collect();
            e.push(target[i].clone());
            e
        })
        .collect();
    let (red, pivots) = rref(&eqs);
    if pivots.contains(&k) {
        return None;
    }
    let mut c = vec![Q::zero(); k];
    for (row, &p) in red.iter().zip(&pivots) {
        c[p] = row[k].clone();
    }
    Some(c)
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}
