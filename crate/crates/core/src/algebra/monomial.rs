use std::fmt;

use crate::error::{Error, Result};

/// A power product `x_1^{e_1} ⋯ x_n^{e_n}` stored as a dense exponent vector.
///
/// The derived `Ord` is plain lexicographic order on the exponent vector. It
/// is only used for canonical storage; term orders live in [`super::TermOrder`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// `x_i^e` in `n` variables, `i` zero-based.
    pub fn var_power(n: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; n];
        exps[i] = e;
        Monomial { exps }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of the zero-based variable `i`.
    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// One-based index of the last variable dividing `self`; 0 for the unit.
    pub fn max_index(&self) -> usize {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .map_or(0, |i| i + 1)
    }

    /// The `j`-truncation `x_1^{e_1} ⋯ x_j^{e_j}`, kept in `n` variables.
    pub fn truncate(&self, j: usize) -> Monomial {
        let mut exps = self.exps.clone();
        for e in exps.iter_mut().skip(j) {
            *e = 0;
        }
        Monomial { exps }
    }

    /// Degree of the `j`-truncation.
    pub fn prefix_degree(&self, j: usize) -> u32 {
        self.exps.iter().take(j).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.n(), other.n());
        let mut exps = Vec::with_capacity(self.n());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `true` iff every exponent is strictly below the matching entry of `m`.
    pub fn is_m_free(&self, m: &DegreeVector) -> bool {
        self.exps.len() == m.n() && self.exps.iter().zip(m.as_slice()).all(|(e, mi)| e < mi)
    }

    /// Re-embed into `n` variables, padding with zero exponents or dropping
    /// trailing variables (which must then have exponent zero).
    pub fn resize(&self, n: usize) -> Monomial {
        let mut exps = self.exps.clone();
        debug_assert!(exps.iter().skip(n).all(|&e| e == 0));
        exps.resize(n, 0);
        Monomial { exps }
    }

    /// Apply a variable relabelling: variable `i` of `self` becomes variable
    /// `target[i]` of the result.
    pub fn relabel(&self, target: &[usize]) -> Monomial {
        let mut exps = vec![0; self.n()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[target[i]] = e;
        }
        Monomial { exps }
    }

    /// All monomials dividing `self`, in lexicographic order of exponents.
    pub fn divisors(&self) -> Vec<Monomial> {
        let mut out = vec![Monomial::one(self.n())];
        for (i, &e) in self.exps.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for base in &out {
                for a in 0..=e {
                    let mut m = base.clone();
                    m.exps[i] = a;
                    next.push(m);
                }
            }
            out = next;
        }
        out
    }

    /// Parse `1`, `x1^2*x3`, `x2` and similar products over `n` variables.
    pub fn parse(n: usize, s: &str) -> Result<Monomial> {
        let s = s.trim();
        let mut exps = vec![0u32; n];
        if s == "1" || s.is_empty() {
            return Ok(Monomial { exps });
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let (var, pow) = match factor.split_once('^') {
                Some((v, p)) => (
                    v,
                    p.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            let idx = var
                .trim()
                .strip_prefix('x')
                .and_then(|i| i.parse::<usize>().ok())
                .filter(|&i| i >= 1 && i <= n)
                .ok_or_else(|| Error::Parse(format!("bad variable {var:?} for n = {n}")))?;
            exps[idx - 1] += pow;
        }
        Ok(Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The exponent vector `m = (m_1, …, m_n)` of the pure powers, every entry at least 2.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DegreeVector(Vec<u32>);

impl DegreeVector {
    pub fn new(m: Vec<u32>) -> Result<Self> {
        if let Some(bad) = m.iter().find(|&&mi| mi < 2) {
            return Err(Error::InvalidParameters(format!(
                "every m_i must be at least 2, found {bad}"
            )));
        }
        Ok(DegreeVector(m))
    }

    /// Equigenerated vector `(m, …, m)` of length `n`.
    pub fn equigenerated(m: u32, n: usize) -> Result<Self> {
        Self::new(vec![m; n])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// `m_i` for a one-based index.
    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn prefix(&self, j: usize) -> DegreeVector {
        DegreeVector(self.0[..j].to_vec())
    }

    /// `D_j = Σ_{i ≤ j} (m_i − 1)`, the socle degree of the first `j` pure powers.
    pub fn socle(&self, j: usize) -> u32 {
        self.0[..j].iter().map(|mi| mi - 1).sum()
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn max(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `x_1^{m_1 − 1} ⋯ x_j^{m_j − 1}` embedded in `n` variables.
    pub fn socle_monomial(&self, j: usize, n: usize) -> Monomial {
        let mut exps = vec![0; n];
        for i in 0..j {
            exps[i] = self.0[i] - 1;
        }
        Monomial::new(exps)
    }

    pub fn permuted(&self, ranking: &[usize]) -> DegreeVector {
        DegreeVector(ranking.iter().map(|&r| self.0[r]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[u32]) -> DegreeVector {
        DegreeVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn m_free_examples() {
        let mv = m(&[3, 2, 2, 3]);
        assert!(Monomial::new(vec![1, 0, 1, 2]).is_m_free(&mv));
        assert!(Monomial::one(4).is_m_free(&mv));
        assert!(!Monomial::new(vec![0, 2, 0, 0]).is_m_free(&mv));
    }

    #[test]
    fn max_index_of_unit_is_zero() {
        assert_eq!(Monomial::one(3).max_index(), 0);
        assert_eq!(Monomial::new(vec![1, 0, 2, 0]).max_index(), 3);
    }

    #[test]
    fn parse_and_display() {
        let s = Monomial::parse(4, "x1*x3*x4^2").unwrap();
        assert_eq!(s.exps(), &[1, 0, 1, 2]);
        assert_eq!(s.to_string(), "x1*x3*x4^2");
        assert_eq!(Monomial::parse(2, "1").unwrap(), Monomial::one(2));
        assert!(Monomial::parse(2, "x3").is_err());
    }

    #[test]
    fn divisors_count() {
        let s = Monomial::new(vec![2, 0, 1]);
        assert_eq!(s.divisors().len(), 6);
    }

    #[test]
    fn rejects_small_degrees() {
        assert!(DegreeVector::new(vec![2, 1]).is_err());
        assert_eq!(m(&[3, 2, 2, 3]).socle(4), 6);
    }
}
