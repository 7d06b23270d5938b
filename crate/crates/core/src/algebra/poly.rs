use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{DegreeVector, Field, Monomial, Rationals, TermOrder};
use crate::error::{Error, Result};

/// A polynomial as a finite map from monomials to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly<F: Field> {
    field: F,
    n: usize,
    terms: BTreeMap<Monomial, F::Elem>,
}

/// Polynomials with rational coefficients.
pub type QPoly = SparsePoly<Rationals>;

impl<F: Field> SparsePoly<F> {
    pub fn zero(field: F, n: usize) -> Self {
        SparsePoly {
            field,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(field: F, mono: Monomial, c: F::Elem) -> Self {
        let n = mono.n();
        let mut p = Self::zero(field, n);
        p.add_term(mono, c);
        p
    }

    pub fn monomial(field: F, mono: Monomial) -> Self {
        let one = field.one();
        Self::term(field, mono, one)
    }

    /// `x_j + x_{j+1} + ⋯ + x_n` for a one-based `j`.
    pub fn linear_form(field: F, n: usize, j: usize) -> Self {
        let mut p = Self::zero(field, n);
        for i in j.saturating_sub(1)..n {
            let one = p.field.one();
            p.add_term(Monomial::var_power(n, i, 1), one);
        }
        p
    }

    pub fn from_terms(field: F, n: usize, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Self {
        let mut p = Self::zero(field, n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    #[inline]
    pub fn field(&self) -> &F {
        &self.field
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Add `c·mono` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, mono: Monomial, c: F::Elem) {
        debug_assert_eq!(mono.n(), self.n);
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(old) => {
                let s = self.field.add(old, &c);
                if self.field.is_zero(&s) {
                    self.terms.remove(&mono);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            let neg = self.field.neg(c);
            r.add_term(m.clone(), neg);
        }
        r
    }

    pub fn scalar_mul(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(self.field.clone(), self.n);
        }
        SparsePoly {
            field: self.field.clone(),
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), self.field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, mono: &Monomial, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(self.field.clone(), self.n);
        }
        SparsePoly {
            field: self.field.clone(),
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), self.field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero(self.field.clone(), self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                r.add_term(ma.mul(mb), self.field.mul(ca, cb));
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::monomial(self.field.clone(), Monomial::one(self.n));
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Delete every term whose exponent of `x_i` reaches `m_i` for some
    /// one-based `i ≥ from_index`.
    pub fn normal_form_pure_powers(&self, m: &DegreeVector, from_index: usize) -> Self {
        let start = from_index.saturating_sub(1);
        let keep = |mono: &Monomial| (start..self.n.min(m.n())).all(|i| mono.exp(i) < m.as_slice()[i]);
        SparsePoly {
            field: self.field.clone(),
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(mono, _)| keep(mono))
                .map(|(mono, c)| (mono.clone(), c.clone()))
                .collect(),
        }
    }

    /// Replace the zero-based variable `var` by `x_j + ⋯ + x_{n_total}`
    /// (one-based `j`), re-embedding the result in `n_total` variables.
    pub fn substitute(&self, var: usize, j: usize, n_total: usize) -> Self {
        let lin = Self::linear_form(self.field.clone(), n_total, j);
        let mut powers = vec![Self::monomial(self.field.clone(), Monomial::one(n_total))];
        let mut r = Self::zero(self.field.clone(), n_total);
        for (mono, c) in &self.terms {
            let e = mono.exp(var) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(&lin);
                powers.push(next);
            }
            let mut rest: Vec<u32> = mono.exps().to_vec();
            rest[var] = 0;
            rest.resize(n_total, 0);
            let part = powers[e].mul_term(&Monomial::new(rest), c);
            for (m2, c2) in part.terms {
                r.add_term(m2, c2);
            }
        }
        r
    }

    /// Relabel variables: `x_i` becomes `x_{target[i]}` (zero-based).
    pub fn relabel(&self, target: &[usize]) -> Self {
        SparsePoly {
            field: self.field.clone(),
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.relabel(target), c.clone()))
                .collect(),
        }
    }

    pub fn leading_term(&self, order: &TermOrder) -> Result<(Monomial, F::Elem)> {
        let mut it = self.terms.iter();
        let (mut best, mut bc) = it.next().ok_or(Error::ZeroPolynomial)?;
        for (m, c) in it {
            if order.cmp(m, best).is_gt() {
                best = m;
                bc = c;
            }
        }
        Ok((best.clone(), bc.clone()))
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Result<Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Terms sorted descending in `order`.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(Monomial, F::Elem)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn make_monic(&self, order: &TermOrder) -> Result<Self> {
        let (_, lc) = self.leading_term(order)?;
        Ok(self.scalar_mul(&self.field.inv(&lc)))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Full reduction of `self` by `basis` (the division algorithm): the
    /// remainder has no term divisible by a leading monomial of `basis`.
    pub fn reduce(&self, basis: &[Self], order: &TermOrder) -> Result<Self> {
        let leads = basis
            .iter()
            .map(|g| g.leading_term(order))
            .collect::<Result<Vec<_>>>()?;
        let mut rem = Self::zero(self.field.clone(), self.n);
        let mut p = self.clone();
        while !p.is_zero() {
            let (lm, lc) = p.leading_term(order)?;
            let hit = leads.iter().position(|(m, _)| m.divides(&lm));
            match hit {
                Some(i) => {
                    let q = lm.div(&leads[i].0).unwrap();
                    let c = self.field.div(&lc, &leads[i].1);
                    p = p.sub(&basis[i].mul_term(&q, &c));
                }
                None => {
                    p.terms.remove(&lm);
                    rem.add_term(lm, lc);
                }
            }
        }
        Ok(rem)
    }

    /// Map coefficients into another field through their rational values.
    pub fn convert<G: Field>(&self, target: &G) -> Result<SparsePoly<G>> {
        let mut r = SparsePoly::zero(target.clone(), self.n);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), target.from_rational(&self.field.to_rational(c))?);
        }
        Ok(r)
    }

    /// Infix rendering, terms descending in `order`, e.g. `x1^2 + 1/2*x2`.
    pub fn render(&self, order: &TermOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let r = self.field.to_rational(&c);
            let neg = r < num_rational::BigRational::from_integer(0.into());
            let abs = if neg { -r } else { r };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let one = abs == num_rational::BigRational::from_integer(1.into());
            let coeff = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            match (one, m.is_one()) {
                (true, true) => out.push('1'),
                (true, false) => write!(out, "{m}").unwrap(),
                (false, true) => out.push_str(&coeff),
                (false, false) => write!(out, "{coeff}*{m}").unwrap(),
            }
        }
        out
    }
}

impl QPoly {
    /// Parse a sum of terms such as `x1^2 + 2*x1*x2 - 1/2*x4^2` over `n` variables.
    pub fn parse(n: usize, s: &str) -> Result<QPoly> {
        let q = Rationals;
        let mut p = QPoly::zero(q, n);
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if compact == "0" {
            return Ok(p);
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                pieces.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if ch == '+' || ch == '-' {
                if ch == '-' {
                    neg = !neg;
                }
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        pieces.push((neg, cur));
        for (neg, piece) in pieces {
            let mut coeff = q.one();
            let mut exps = vec![0u32; n];
            for factor in piece.split('*') {
                if factor.starts_with('x') {
                    let m = Monomial::parse(n, factor)?;
                    for (e, a) in exps.iter_mut().zip(m.exps()) {
                        *e += a;
                    }
                } else {
                    coeff = q.mul(&coeff, &super::field::parse_rational(factor)?);
                }
            }
            if neg {
                coeff = q.neg(&coeff);
            }
            p.add_term(Monomial::new(exps), coeff);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, TermOrder};

    fn dv(v: &[u32]) -> DegreeVector {
        DegreeVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn normal_form_drops_pure_power() {
        let f = QPoly::linear_form(Rationals, 4, 3).pow(2);
        let nf = f.normal_form_pure_powers(&dv(&[3, 2, 2, 3]), 3);
        assert_eq!(nf, QPoly::parse(4, "2*x3*x4 + x4^2").unwrap());
        let g = QPoly::parse(5, "x4^3 + x5^3").unwrap();
        assert!(g.normal_form_pure_powers(&dv(&[2, 2, 2, 3, 3]), 4).is_zero());
    }

    #[test]
    fn leading_term_revlex() {
        let g = QPoly::parse(5, "x4^3 + x5^3").unwrap();
        let (m, c) = g.leading_term(&TermOrder::grevlex(5)).unwrap();
        assert_eq!(m, Monomial::parse(5, "x4^3").unwrap());
        assert_eq!(c, Rationals.one());
        assert!(QPoly::zero(Rationals, 2).leading_term(&TermOrder::grevlex(2)).is_err());
    }

    #[test]
    fn parse_render_round_trip() {
        let o = TermOrder::grevlex(4);
        let text = "x1*x2*x3 + x1*x2*x4 + 1/2*x1*x4^2 - 2*x3*x4^2";
        let p = QPoly::parse(4, text).unwrap();
        assert_eq!(p.render(&o), text);
        assert_eq!(QPoly::parse(4, &p.render(&o)).unwrap(), p);
    }

    #[test]
    fn substitute_embeds_linear_form() {
        let y = QPoly::parse(2, "x2^2").unwrap();
        let s = y.substitute(1, 2, 3);
        assert_eq!(s, QPoly::parse(3, "x2^2 + 2*x2*x3 + x3^2").unwrap());
    }

    #[test]
    fn reduce_by_linear() {
        let o = TermOrder::grevlex(2);
        let f = QPoly::parse(2, "x1^2 + x2^2").unwrap();
        let g = QPoly::parse(2, "x1 - x2").unwrap();
        let r = f.reduce(&[g], &o).unwrap();
        assert_eq!(r, QPoly::parse(2, "2*x2^2").unwrap());
    }

    #[test]
    fn convert_to_prime_field() {
        let p = QPoly::parse(2, "3*x1 + 1/2*x2").unwrap();
        let f3 = PrimeField::new(3).unwrap();
        let r = p.convert(&f3).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.coeff(&Monomial::parse(2, "x2").unwrap()), 2);
    }
}
