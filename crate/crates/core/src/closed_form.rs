//! The reduced Gröbner basis of `I_{n,m,k}` from closed coefficient formulas.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::algebra::{DegreeVector, Monomial, OrderKind, QPoly, Rational, Rationals, TermOrder};
use crate::basis::{GroebnerBasis, PolyKey};
use crate::combinat::{binomial, factorial, multinomial, permutations};
use crate::error::{Error, Result};
use crate::initial::{crit_index, crit_sets, enumerate_m_free, minimal_generators, MonomialIdeal};

/// `(x_j + ⋯ + x_n)^e` by the multinomial theorem, keeping only terms with
/// `x_i`-exponent below `m_i` for `i ≥ j`. `j` is one-based.
pub fn truncated_power(m: &DegreeVector, j: usize, e: u32) -> QPoly {
    let n = m.n();
    let q = Rationals;
    let mut p = QPoly::zero(q, n);
    let tail = DegreeVector::new(m.as_slice()[j - 1..].to_vec()).expect("valid degrees");
    for a in enumerate_m_free(&tail, e) {
        let mut exps = vec![0u32; n];
        exps[j - 1..].copy_from_slice(a.exps());
        p.add_term(Monomial::new(exps), Rational::from_integer(multinomial(a.exps())));
    }
    p
}

fn check_crit(s: &Monomial, j: usize, m: &DegreeVector, k: u32) -> Result<()> {
    if s.n() != m.n() {
        return Err(Error::DimensionMismatch {
            expected: m.n(),
            got: s.n(),
        });
    }
    if s.max_index() != j {
        return Err(Error::InvalidParameters(format!(
            "{s} has last variable x{}, not x{j}",
            s.max_index()
        )));
    }
    if crit_index(s, m, k) != Some(j) {
        return Err(Error::NotCritical(s.to_string()));
    }
    Ok(())
}

/// `λ_{s''} = Π_{i<j} (s_i!/s''_i!)·C(m_i − s''_i − 1, s_i − s''_i) · s_j!/(deg s − deg s'')!`.
pub fn lambda_divisor(s: &Monomial, s2: &Monomial, j: usize, m: &DegreeVector) -> Rational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..j - 1 {
        let (si, ti, mi) = (s.exp(i) as i64, s2.exp(i) as i64, m.as_slice()[i] as i64);
        num *= factorial(si as u64) * binomial(mi - ti - 1, si - ti);
        den *= factorial(ti as u64);
    }
    num *= factorial(s.exp(j - 1) as u64);
    den *= factorial((s.degree() - s2.degree()) as u64);
    Rational::new(num, den)
}

/// `g_s = Σ_{s''|s'} λ_{s''}·s''·(x_j + ⋯ + x_n)^{deg s − deg s''}`, reduced
/// modulo `x_j^{m_j}, …, x_n^{m_n}`.
pub fn build_gs_divisor_form(s: &Monomial, j: usize, m: &DegreeVector, k: u32) -> Result<QPoly> {
    check_crit(s, j, m, k)?;
    let n = m.n();
    let s1 = s.truncate(j - 1);
    let mut g = QPoly::zero(Rationals, n);
    let mut powers: Vec<Option<QPoly>> = vec![None; s.degree() as usize + 1];
    for s2 in s1.divisors() {
        let lambda = lambda_divisor(s, &s2, j, m);
        let e = (s.degree() - s2.degree()) as usize;
        let pw = powers[e].get_or_insert_with(|| truncated_power(m, j, e as u32));
        for (mono, c) in pw.mul_term(&s2, &lambda).terms() {
            g.add_term(mono.clone(), c.clone());
        }
    }
    Ok(g)
}

/// Monomials `t` of degree `deg s` below `s`, outside `ideal`, with
/// `t_i ≤ s_i` for `i < j`.
pub fn tail(s: &Monomial, m: &DegreeVector, ideal: &MonomialIdeal) -> Vec<Monomial> {
    let j = s.max_index();
    let order = TermOrder::grevlex(m.n());
    enumerate_m_free(m, s.degree())
        .into_iter()
        .filter(|t| {
            order.cmp(s, t).is_gt()
                && (0..j - 1).all(|i| t.exp(i) <= s.exp(i))
                && !ideal.contains(t)
        })
        .collect()
}

/// `λ_t = Π_{i<j} C(m_i − t_i − 1, s_i − t_i) · Π s_i! / Π t_i!`.
pub fn lambda_tail(s: &Monomial, t: &Monomial, m: &DegreeVector) -> Rational {
    let j = s.max_index();
    let mut num = BigInt::one();
    for i in 0..j - 1 {
        let (si, ti, mi) = (s.exp(i) as i64, t.exp(i) as i64, m.as_slice()[i] as i64);
        num *= binomial(mi - ti - 1, si - ti);
    }
    let mut den = BigInt::one();
    for i in 0..m.n() {
        num *= factorial(s.exp(i) as u64);
        den *= factorial(t.exp(i) as u64);
    }
    Rational::new(num, den)
}

/// `g_s = s + Σ_{t ∈ Tail(s)} λ_t·t`, with the initial ideal passed in.
pub fn build_gs_tail_form_with(s: &Monomial, m: &DegreeVector, k: u32, ideal: &MonomialIdeal) -> Result<QPoly> {
    check_crit(s, s.max_index(), m, k)?;
    let mut g = QPoly::monomial(Rationals, s.clone());
    for t in tail(s, m, ideal) {
        let c = lambda_tail(s, &t, m);
        g.add_term(t, c);
    }
    Ok(g)
}

pub fn build_gs_tail_form(s: &Monomial, m: &DegreeVector, k: u32) -> Result<QPoly> {
    let ideal = minimal_generators(m.n(), m, k)?;
    build_gs_tail_form_with(s, m, k, &ideal)
}

/// The witness `f_s` with `g_s = f_s·ℓ^k` in
/// `k[x_1, …, x_{j−1}, y]/(x_1^{m_1}, …, x_{j−1}^{m_{j−1}})`, where `j = max_index(s)`
/// and `y` occupies the `j`-th slot.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub s: Monomial,
    pub u: Monomial,
    pub mu: Vec<(Monomial, Rational)>,
    pub f_s: QPoly,
    m: DegreeVector,
    k: u32,
}

impl Certificate {
    pub fn frame(&self) -> usize {
        self.s.n()
    }
}

/// Degrees of the quotient ring: the first `j − 1` variables are reduced,
/// `y` is not (its bound is never reached).
fn frame_degrees(m: &DegreeVector, j: usize) -> DegreeVector {
    let mut v = m.as_slice()[..j - 1].to_vec();
    v.push(u32::MAX);
    DegreeVector::new(v).expect("valid degrees")
}

/// `g_s` with `y` left unexpanded: `Σ_{s''|s'} λ_{s''}·s''·y^{deg s − deg s''}`,
/// in the `j`-variable frame.
pub fn gs_in_frame(s: &Monomial, m: &DegreeVector) -> QPoly {
    let j = s.max_index();
    let sf = Monomial::new(s.exps()[..j].to_vec());
    let mf = m.prefix(j);
    let s1 = sf.truncate(j - 1);
    let mut g = QPoly::zero(Rationals, j);
    for s2 in s1.divisors() {
        let lambda = lambda_divisor(&sf, &s2, j, &mf);
        let mut e = s2.exps().to_vec();
        e[j - 1] = sf.degree() - s2.degree();
        g.add_term(Monomial::new(e), lambda);
    }
    g
}

pub fn build_certificate(s: &Monomial, m: &DegreeVector, k: u32) -> Result<Certificate> {
    let j = s.max_index();
    if j == 0 {
        return Err(Error::Precondition("s must be divisible by some variable".into()));
    }
    let sf = Monomial::new(s.exps()[..j].to_vec());
    let mf = m.prefix(j);
    let s1 = sf.truncate(j - 1);
    let pinned = k as i64 + mf.socle(j - 1) as i64 - 2 * s1.degree() as i64;
    if sf.exp(j - 1) as i64 != pinned {
        return Err(Error::Precondition(format!(
            "exponent of x{j} in {s} is not {pinned}"
        )));
    }
    let socle = mf.socle_monomial(j - 1, j);
    let u = socle
        .div(&s1)
        .ok_or_else(|| Error::Precondition(format!("{s} does not divide the socle monomial")))?;
    let ell = QPoly::linear_form(Rationals, j, 1);
    let mut mu = Vec::new();
    let mut f = QPoly::zero(Rationals, j);
    for v in u.divisors() {
        let e = sf.degree() as i64 - v.degree() as i64 - k as i64;
        if e < 0 {
            return Err(Error::Precondition(format!(
                "negative power of the linear form for v = {v}"
            )));
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..j - 1 {
            let (si, vi, ui, mi) = (
                sf.exp(i) as i64,
                v.exp(i) as i64,
                u.exp(i) as i64,
                mf.as_slice()[i] as i64,
            );
            num *= factorial(si as u64) * binomial(mi - 1 - vi, ui - vi);
            den *= factorial(vi as u64);
        }
        num *= factorial(sf.exp(j - 1) as u64);
        den *= factorial((sf.degree() - v.degree()) as u64);
        if v.degree() % 2 == 1 {
            num = -num;
        }
        let c = Rational::new(num, den);
        let term = ell.pow(e as u32).mul_term(&v, &c);
        f = f.add(&term);
        mu.push((v, c));
    }
    let f = f.normal_form_pure_powers(&frame_degrees(&mf, j), 1);
    Ok(Certificate {
        s: sf,
        u,
        mu,
        f_s: f,
        m: mf,
        k,
    })
}

/// Checks `g_s − f_s·ℓ^k = 0` after reducing the first `j − 1` pure powers.
pub fn verify_certificate(cert: &Certificate) -> bool {
    let j = cert.frame();
    let ell = QPoly::linear_form(Rationals, j, 1);
    let lhs = gs_in_frame(&cert.s, &cert.m);
    let rhs = cert.f_s.mul(&ell.pow(cert.k));
    lhs.sub(&rhs)
        .normal_form_pure_powers(&frame_degrees(&cert.m, j), 1)
        .is_zero()
}

/// Substituting `y ↦ x_j + ⋯ + x_n` into the frame form and reducing gives the
/// divisor form.
pub fn frame_form_matches(s: &Monomial, m: &DegreeVector, k: u32) -> Result<bool> {
    let j = s.max_index();
    let g = gs_in_frame(s, m)
        .substitute(j - 1, j, m.n())
        .normal_form_pure_powers(m, j);
    Ok(g == build_gs_divisor_form(s, j, m, k)?)
}

/// `Σ_{v|p, v|r} (−1)^{deg v} Π C(r_i, v_i)·C(α_i − v_i, p_i − v_i) = Π C(α_i − r_i, p_i)`
/// with `α = pq`.
pub fn counting_identity(p: &Monomial, q: &Monomial, r: &Monomial) -> Result<bool> {
    let alpha = p.mul(q);
    if !r.divides(&alpha) {
        return Err(Error::Precondition(format!("{r} does not divide {alpha}")));
    }
    let g = p.gcd(r);
    let mut lhs = BigInt::zero();
    for v in g.divisors() {
        let mut term = BigInt::one();
        for i in 0..p.n() {
            let (ri, vi, ai, pi) = (r.exp(i) as i64, v.exp(i) as i64, alpha.exp(i) as i64, p.exp(i) as i64);
            term *= binomial(ri, vi) * binomial(ai - vi, pi - vi);
        }
        if v.degree() % 2 == 1 {
            lhs -= term;
        } else {
            lhs += term;
        }
    }
    let mut rhs = BigInt::one();
    for i in 0..p.n() {
        rhs *= binomial(alpha.exp(i) as i64 - r.exp(i) as i64, p.exp(i) as i64);
    }
    Ok(lhs == rhs)
}

/// The reduced Gröbner basis for a graded order with the given ranking. The
/// basis depends only on the ranking; the order kind only fixes the sorting.
pub fn reduced_gb(m: &DegreeVector, k: u32, order: &TermOrder) -> Result<GroebnerBasis> {
    let n = m.n();
    if order.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: order.n(),
        });
    }
    let ranking = order.ranking();
    let canon = m.permuted(ranking);
    let crit = crit_sets(n, &canon, k)?;
    let mut elements: Vec<QPoly> = crit
        .pure_powers
        .iter()
        .map(|p| QPoly::monomial(Rationals, p.clone()))
        .collect();
    let gens: Vec<(usize, Monomial)> = crit
        .per_j
        .iter()
        .enumerate()
        .flat_map(|(j, v)| v.iter().map(move |s| (j + 1, s.clone())))
        .collect();
    let built: Vec<QPoly> = gens
        .par_iter()
        .map(|(j, s)| build_gs_divisor_form(s, *j, &canon, k))
        .collect::<Result<_>>()?;
    elements.extend(built);
    let elements = elements.into_iter().map(|g| g.relabel(ranking)).collect();
    Ok(GroebnerBasis::new(order.clone(), elements))
}

/// The number of distinct marked reduced Gröbner bases over all `n!` rankings.
pub fn distinct_gb_census(m: &DegreeVector, k: u32) -> Result<usize> {
    // Bases are marked: the same polynomials with different leading terms count twice.
    let keys: Vec<(BTreeSet<PolyKey>, BTreeSet<Monomial>)> = permutations(m.n())
        .into_par_iter()
        .map(|r| {
            let order = TermOrder::new(OrderKind::GradedRevLex, r)?;
            let gb = reduced_gb(m, k, &order)?;
            Ok((gb.canonical_key(), gb.leading_monomials().into_iter().collect()))
        })
        .collect::<Result<_>>()?;
    Ok(keys.into_iter().collect::<BTreeSet<_>>().len())
}

/// Whether every prime factor of every numerator and denominator is at most `bound`.
pub fn coefficients_prime_bounded(gb: &GroebnerBasis, bound: u64) -> bool {
    gb.elements().iter().all(|g| {
        g.terms().all(|(_, c)| {
            crate::algebra::primes_bounded_by(c.numer(), bound)
                && crate::algebra::primes_bounded_by(c.denom(), bound)
        })
    })
}

/// Scale to coprime integer coefficients with a positive leading coefficient.
pub fn clear_denominators(g: &QPoly, order: &TermOrder) -> Result<Vec<(Monomial, BigInt)>> {
    let (_, lc) = g.leading_term(order)?;
    let lcm = g
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut ints: Vec<(Monomial, BigInt)> = g
        .sorted_terms(order)
        .into_iter()
        .map(|(m, c)| (m, (c * Rational::from_integer(lcm.clone())).to_integer()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
    let sign = if lc.is_negative() { -BigInt::one() } else { BigInt::one() };
    for (_, c) in ints.iter_mut() {
        *c = &*c / &content * &sign;
    }
    Ok(ints)
}

/// Convenience: the closed-form basis for the identity ranking under `kind`.
pub fn reduced_gb_identity(m: &DegreeVector, k: u32, kind: OrderKind) -> Result<GroebnerBasis> {
    reduced_gb(m, k, &TermOrder::identity(kind, m.n()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: &[u32]) -> DegreeVector {
        DegreeVector::new(v.to_vec()).unwrap()
    }

    fn mono(n: usize, s: &str) -> Monomial {
        Monomial::parse(n, s).unwrap()
    }

    #[test]
    fn divisor_form_examples() {
        let m = dv(&[3, 2, 2, 3]);
        let g = build_gs_divisor_form(&mono(4, "x1^2"), 1, &m, 2).unwrap();
        assert_eq!(
            g,
            QPoly::parse(4, "x1^2+2*x1*x2+2*x1*x3+2*x2*x3+2*x1*x4+2*x2*x4+2*x3*x4+x4^2").unwrap()
        );
        let g = build_gs_divisor_form(&mono(4, "x1*x2*x3"), 3, &m, 2).unwrap();
        assert_eq!(
            g,
            QPoly::parse(4, "x1*x2*x3+x1*x2*x4+x1*x3*x4+2*x2*x3*x4+1/2*x1*x4^2+x2*x4^2+x3*x4^2").unwrap()
        );
        let g = build_gs_divisor_form(&mono(4, "x2*x3*x4^2"), 4, &m, 2).unwrap();
        assert_eq!(g, QPoly::parse(4, "x2*x3*x4^2").unwrap());
    }

    #[test]
    fn rejects_non_critical() {
        let m = dv(&[3, 2, 2, 3]);
        assert!(matches!(
            build_gs_divisor_form(&mono(4, "x1*x4"), 4, &m, 2),
            Err(Error::NotCritical(_))
        ));
        assert!(build_gs_divisor_form(&mono(4, "x1^2"), 2, &m, 2).is_err());
    }

    #[test]
    fn tail_form_matches() {
        let m = dv(&[3, 2, 2, 3]);
        for s in ["x1^2", "x1*x2*x3", "x2*x3*x4^2", "x1*x3*x4^2", "x1*x2*x4^2"] {
            let s = mono(4, s);
            assert_eq!(
                build_gs_tail_form(&s, &m, 2).unwrap(),
                build_gs_divisor_form(&s, s.max_index(), &m, 2).unwrap()
            );
        }
    }

    #[test]
    fn certificates() {
        let m = dv(&[3, 2, 2, 3]);
        for s in ["x2*x3*x4^2", "x1*x2*x3", "x1^2"] {
            let s = mono(4, s);
            let c = build_certificate(&s, &m, 2).unwrap();
            assert!(verify_certificate(&c), "{s}");
            assert!(frame_form_matches(&s, &m, 2).unwrap());
        }
        assert!(build_certificate(&mono(4, "x1*x4"), &m, 2).is_err());
    }

    #[test]
    fn counting_identity_small() {
        assert!(counting_identity(&mono(1, "x1^2"), &mono(1, "x1"), &mono(1, "x1")).unwrap());
        assert!(counting_identity(&mono(2, "x1*x2"), &mono(2, "x2"), &mono(2, "1")).unwrap());
        assert!(counting_identity(&mono(1, "x1"), &mono(1, "1"), &mono(1, "x1^2")).is_err());
    }

    #[test]
    fn example_basis() {
        let gb = reduced_gb_identity(&dv(&[3, 2, 2, 3]), 2, OrderKind::GradedRevLex).unwrap();
        assert_eq!(gb.len(), 8);
        assert!(gb.is_reduced());
        assert!(coefficients_prime_bounded(&gb, 3));
    }

    #[test]
    fn census_small() {
        assert_eq!(distinct_gb_census(&dv(&[2, 3, 4]), 2).unwrap(), 5);
        assert_eq!(distinct_gb_census(&dv(&[3, 3, 3]), 2).unwrap(), 6);
    }

    #[test]
    fn clearing() {
        let o = TermOrder::grevlex(2);
        let g = QPoly::parse(2, "x1^2 + 1/3*x2^2").unwrap();
        let c = clear_denominators(&g, &o).unwrap();
        assert_eq!(c[0].1, BigInt::from(3));
        assert_eq!(c[1].1, BigInt::from(1));
    }
}
