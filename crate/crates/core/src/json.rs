//! Serializable views of polynomials, bases and monomial sets.

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_rational, Field, Monomial, QPoly, Rationals, SparsePoly, TermOrder};
use crate::basis::GroebnerBasis;
use crate::error::{Error, Result};
use crate::initial::CritSets;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub coeff: String,
}

/// Terms sorted descending in the active order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn from_poly<F: Field>(p: &SparsePoly<F>, order: &TermOrder) -> Self {
        PolyJson {
            n: p.n(),
            terms: p
                .sorted_terms(order)
                .into_iter()
                .map(|(m, c)| TermJson {
                    exps: m.exps().to_vec(),
                    coeff: p.field().render(&c),
                })
                .collect(),
        }
    }

    pub fn to_qpoly(&self) -> Result<QPoly> {
        let mut out = QPoly::zero(Rationals, self.n);
        for t in &self.terms {
            if t.exps.len() != self.n {
                return Err(Error::DimensionMismatch {
                    expected: self.n,
                    got: t.exps.len(),
                });
            }
            out.add_term(Monomial::new(t.exps.clone()), parse_rational(&t.coeff)?);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub n: usize,
    pub m: Vec<u32>,
    pub k: u32,
    pub order: String,
    /// One-based, largest variable first.
    pub ranking: Vec<usize>,
    /// Omitted for the rationals.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub characteristic: Option<u64>,
    pub elements: Vec<PolyJson>,
}

impl BasisJson {
    pub fn from_basis<F: Field>(gb: &GroebnerBasis<F>, m: &[u32], k: u32, characteristic: Option<u64>) -> Self {
        let order = gb.order();
        BasisJson {
            n: gb.n(),
            m: m.to_vec(),
            k,
            order: order_name(order).into(),
            ranking: order.ranking().iter().map(|r| r + 1).collect(),
            characteristic,
            elements: gb.elements().iter().map(|g| PolyJson::from_poly(g, order)).collect(),
        }
    }
}

pub fn order_name(order: &TermOrder) -> &'static str {
    match order.kind() {
        crate::algebra::OrderKind::GradedRevLex => "grevlex",
        crate::algebra::OrderKind::GradedLex => "grlex",
    }
}

/// Critical monomials keyed by the one-based index of their last variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CritJson {
    pub pure_powers: Vec<String>,
    pub crit: std::collections::BTreeMap<String, Vec<String>>,
}

impl CritJson {
    pub fn from_sets(c: &CritSets) -> Self {
        CritJson {
            pure_powers: c.pure_powers.iter().map(Monomial::to_string).collect(),
            crit: c
                .per_j
                .iter()
                .enumerate()
                .map(|(j, v)| ((j + 1).to_string(), v.iter().map(Monomial::to_string).collect()))
                .collect(),
        }
    }
}
