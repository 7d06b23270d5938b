use std::cmp::Ordering;

use super::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    GradedRevLex,
    GradedLex,
}

impl std::str::FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grevlex" | "revlex" | "degrevlex" => Ok(OrderKind::GradedRevLex),
            "grlex" | "lex" | "deglex" => Ok(OrderKind::GradedLex),
            other => Err(Error::Parse(format!("unknown order {other:?}"))),
        }
    }
}

/// A graded term order together with a variable ranking.
///
/// `ranking[0]` is the zero-based index of the largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    ranking: Vec<usize>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, ranking: Vec<usize>) -> Result<Self> {
        let n = ranking.len();
        let mut seen = vec![false; n];
        for &r in &ranking {
            if r >= n || seen[r] {
                return Err(Error::InvalidParameters(format!(
                    "ranking {ranking:?} is not a permutation of 0..{n}"
                )));
            }
            seen[r] = true;
        }
        Ok(TermOrder { kind, ranking })
    }

    /// The order with `x_1 ≻ x_2 ≻ ⋯ ≻ x_n`.
    pub fn identity(kind: OrderKind, n: usize) -> Self {
        TermOrder {
            kind,
            ranking: (0..n).collect(),
        }
    }

    pub fn grevlex(n: usize) -> Self {
        Self::identity(OrderKind::GradedRevLex, n)
    }

    pub fn grlex(n: usize) -> Self {
        Self::identity(OrderKind::GradedLex, n)
    }

    /// Parse a one-based comma separated ranking such as `2,1,3`.
    pub fn parse_ranking(s: &str) -> Result<Vec<usize>> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&i| i >= 1)
                    .map(|i| i - 1)
                    .ok_or_else(|| Error::Parse(format!("bad ranking entry {t:?}")))
            })
            .collect()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.ranking.len()
    }

    #[inline]
    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    #[inline]
    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn is_identity(&self) -> bool {
        self.ranking.iter().enumerate().all(|(i, &r)| i == r)
    }

    /// Compare two monomials; panics in debug builds on dimension mismatch.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.n(), self.n());
        debug_assert_eq!(b.n(), self.n());
        let da = a.degree();
        let db = b.degree();
        if da != db {
            return da.cmp(&db);
        }
        match self.kind {
            OrderKind::GradedRevLex => {
                for &v in self.ranking.iter().rev() {
                    let (ea, eb) = (a.exp(v), b.exp(v));
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                }
                Ordering::Equal
            }
            OrderKind::GradedLex => {
                for &v in &self.ranking {
                    let (ea, eb) = (a.exp(v), b.exp(v));
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn try_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.n() != self.n() {
                return Err(Error::DimensionMismatch {
                    expected: self.n(),
                    got: m.n(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// An integer vector whose lexicographic order agrees with the term
    /// order. It is linear in the exponents, so `key(uv) = key(u) + key(v)`.
    pub fn key(&self, a: &Monomial) -> Vec<i64> {
        let mut key = Vec::with_capacity(self.n() + 1);
        key.push(a.degree() as i64);
        match self.kind {
            OrderKind::GradedRevLex => {
                key.extend(self.ranking.iter().rev().map(|&v| -(a.exp(v) as i64)));
            }
            OrderKind::GradedLex => {
                key.extend(self.ranking.iter().map(|&v| a.exp(v) as i64));
            }
        }
        key
    }

    /// Sort descending.
    pub fn sort_desc(&self, monos: &mut [Monomial]) {
        monos.sort_by(|a, b| self.cmp(b, a));
    }
}
