//! A Gröbner basis tied to its term order.

use std::collections::BTreeSet;

use crate::algebra::{Field, Monomial, Rationals, SparsePoly, TermOrder};
use crate::error::Result;
use crate::initial::MonomialIdeal;

/// A polynomial written as `(exponents, "num/den")` pairs in canonical order.
pub type PolyKey = Vec<(Vec<u32>, String)>;

#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field = Rationals> {
    order: TermOrder,
    elements: Vec<SparsePoly<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    /// Sorts the elements ascending by leading monomial; zero polynomials are dropped.
    pub fn new(order: TermOrder, elements: Vec<SparsePoly<F>>) -> Self {
        let mut keyed: Vec<(Monomial, SparsePoly<F>)> = elements
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| (g.leading_monomial(&order).unwrap(), g))
            .collect();
        keyed.sort_by(|a, b| order.cmp(&a.0, &b.0));
        GroebnerBasis {
            order,
            elements: keyed.into_iter().map(|(_, g)| g).collect(),
        }
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[SparsePoly<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn n(&self) -> usize {
        self.order.n()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial(&self.order).unwrap())
            .collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.n(), self.leading_monomials())
    }

    /// Monic, leading monomials pairwise non-dividing, and no tail term in
    /// the initial ideal.
    pub fn is_reduced(&self) -> bool {
        let leads = self.leading_monomials();
        for (i, g) in self.elements.iter().enumerate() {
            let (lm, lc) = g.leading_term(&self.order).unwrap();
            if !g.field().is_one(&lc) {
                return false;
            }
            for (j, h) in leads.iter().enumerate() {
                if i != j && h.divides(&lm) {
                    return false;
                }
            }
            for t in g.support() {
                if *t != lm && leads.iter().any(|h| h.divides(t)) {
                    return false;
                }
            }
        }
        true
    }

    /// Order-independent identity of the basis as a set of polynomials.
    pub fn canonical_key(&self) -> BTreeSet<PolyKey> {
        self.elements
            .iter()
            .map(|g| {
                g.terms()
                    .map(|(m, c)| (m.exps().to_vec(), g.field().render(c)))
                    .collect()
            })
            .collect()
    }

    /// Equality as sets of polynomials.
    pub fn same_as(&self, other: &Self) -> bool {
        self.canonical_key() == other.canonical_key()
    }

    /// Reduce `f` to its normal form modulo the basis.
    pub fn normal_form(&self, f: &SparsePoly<F>) -> Result<SparsePoly<F>> {
        f.reduce(&self.elements, &self.order)
    }

    /// One rendered line per element.
    pub fn render_lines(&self) -> Vec<String> {
        self.elements.iter().map(|g| g.render(&self.order)).collect()
    }
}
