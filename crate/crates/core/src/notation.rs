//! Compact notation for vectors and colored cones in `λ∨` coordinates.
//!
//! A term is `[-][c*](g|l)<i>`: `g<i>` is `γ_i`, `l<i>` is `λ_i∨`, and `c` is an
//! optional rational factor such as `1/2`. A cone is a comma separated list of
//! terms, optionally followed by `| <colors>`: `-g1,-g2,l2 | 2`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::qmath::{self, q, Q, QVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NotationError {
    #[error("cannot parse term {0:?}")]
    BadTerm(String),
    #[error("index {0} out of range")]
    Index(usize),
    #[error("cannot parse color list {0:?}")]
    BadColors(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    Gamma,
    Coroot,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coef: Q,
    pub symbol: Symbol,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConeSpec {
    pub terms: Vec<Term>,
    pub colors: BTreeSet<usize>,
}

pub fn parse_term(s: &str) -> Result<Term, NotationError> {
    let bad = || NotationError::BadTerm(s.to_string());
    let t = s.trim();
    let (sign, t) = match t.strip_prefix('-') {
        Some(rest) => (q(-1), rest),
        None => (q(1), t.strip_prefix('+').unwrap_or(t)),
    };
    let (coef, t) = match t.split_once('*') {
        Some((c, rest)) => (qmath::parse_q(c).ok_or_else(bad)?, rest),
        None => (q(1), t),
    };
    let mut chars = t.chars();
    let symbol = match chars.next() {
        Some('g') => Symbol::Gamma,
        Some('l') => Symbol::Coroot,
        _ => return Err(bad()),
    };
    let index: usize = chars.as_str().parse().map_err(|_| bad())?;
    if index == 0 || index > 64 {
        return Err(NotationError::Index(index));
    }
    Ok(Term { coef: sign * coef, symbol, index })
}

pub fn parse_cone(s: &str) -> Result<ConeSpec, NotationError> {
    let (body, cols) = match s.split_once('|') {
        Some((b, c)) => (b, Some(c)),
        None => (s, None),
    };
    let terms = body
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(parse_term)
        .collect::<Result<Vec<_>, _>>()?;
    let colors = match cols {
        None => BTreeSet::new(),
        Some(c) => c
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().trim_start_matches('D').parse::<usize>().map_err(|_| NotationError::BadColors(c.to_string())))
            .collect::<Result<_, _>>()?,
    };
    Ok(ConeSpec { terms, colors })
}

impl Term {
    /// Evaluates the term given `γ_j` in `λ∨` coordinates.
    pub fn eval(&self, gammas: &[QVec]) -> Result<QVec, NotationError> {
        let m = gammas.len();
        if self.index > m {
            return Err(NotationError::Index(self.index));
        }
        let base = match self.symbol {
            Symbol::Gamma => gammas[self.index - 1].clone(),
            Symbol::Coroot => {
                let mut v = vec![q(0); m];
                v[self.index - 1] = q(1);
                v
            }
        };
        Ok(qmath::scale(&base, &self.coef))
    }
}

impl ConeSpec {
    pub fn generators(&self, gammas: &[QVec]) -> Result<Vec<QVec>, NotationError> {
        self.terms.iter().map(|t| t.eval(gammas)).collect()
    }
}

/// Parses a whitespace separated rational vector such as `-1/2 -1 0 1/2`.
pub fn parse_vector(s: &str) -> Option<QVec> {
    s.split_whitespace().map(qmath::parse_q).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terms() {
        let t = parse_term("-1/2*l4").unwrap();
        assert_eq!((t.coef, t.symbol, t.index), (qmath::qf(-1, 2), Symbol::Coroot, 4));
        assert!(parse_term("x1").is_err());
        assert!(parse_term("g0").is_err());
    }

    #[test]
    fn cones() {
        let c = parse_cone("-g1,-g2,l2 | 2").unwrap();
        assert_eq!(c.terms.len(), 3);
        assert_eq!(c.colors, BTreeSet::from([2]));
        assert!(parse_cone("").unwrap().terms.is_empty());
    }
}
