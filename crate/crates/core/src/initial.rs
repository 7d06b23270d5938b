//! Critical monomials and the minimal generators of the initial ideal.

use crate::algebra::{DegreeVector, Monomial, TermOrder};
use crate::error::{Error, Result};
use crate::paths::{is_critical, monomial_to_path, RedLine};

/// All `m`-free monomials of degree `d`, sorted descending in graded revlex.
pub fn enumerate_m_free(m: &DegreeVector, d: u32) -> Vec<Monomial> {
    let n = m.n();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    // Suffix capacities bound the remaining degree.
    let mut cap = vec![0u32; n + 1];
    for i in (0..n).rev() {
        cap[i] = cap[i + 1] + m.as_slice()[i] - 1;
    }
    fn rec(i: usize, left: u32, m: &[u32], cap: &[u32], exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == m.len() {
            if left == 0 {
                out.push(Monomial::new(exps.clone()));
            }
            return;
        }
        let hi = left.min(m[i] - 1);
        let lo = left.saturating_sub(cap[i + 1]);
        for e in lo..=hi {
            exps[i] = e;
            rec(i + 1, left - e, m, cap, exps, out);
        }
        exps[i] = 0;
    }
    if d <= cap[0] {
        rec(0, d, m.as_slice(), &cap, &mut exps, &mut out);
    }
    TermOrder::grevlex(n).sort_desc(&mut out);
    out
}

/// All monomials of degree `d` in `n` variables, graded revlex descending.
pub fn enumerate_monomials(n: usize, d: u32) -> Vec<Monomial> {
    if n == 0 {
        return if d == 0 { vec![Monomial::one(0)] } else { Vec::new() };
    }
    let m = DegreeVector::new(vec![d + 1; n]).expect("d + 1 >= 2 unless d = 0");
    enumerate_m_free(&m, d)
}

/// `k + D_{j−1} − 2·deg(t)`: the exponent of `x_j` that makes `t·x_j^e` critical.
fn pinned_exponent(m: &DegreeVector, k: u32, j: usize, deg_t: u32) -> i64 {
    k as i64 + m.socle(j - 1) as i64 - 2 * deg_t as i64
}

/// The critical monomials grouped by their last variable, plus the pure powers
/// that survive as minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CritSets {
    /// `per_j[j − 1]` holds the critical monomials with last variable `x_j`.
    pub per_j: Vec<Vec<Monomial>>,
    pub pure_powers: Vec<Monomial>,
}

impl CritSets {
    pub fn all(&self) -> impl Iterator<Item = &Monomial> {
        self.per_j.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.per_j.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Whether `x_j^{m_j}` is a minimal generator: `k + D_{j−1} ≥ m_j`.
pub fn pure_power_retained(m: &DegreeVector, k: u32, j: usize) -> bool {
    k + m.socle(j - 1) >= m.get(j)
}

fn validate(n: usize, m: &DegreeVector, k: u32) -> Result<()> {
    if m.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: m.n(),
        });
    }
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    Ok(())
}

/// Smallest value `≥ 1` of `k + D − 2g` over `0 ≤ g ≤ deg t`.
fn least_positive_pin(base: i64, deg_t: u32) -> i64 {
    let v = base - 2 * deg_t as i64;
    if v >= 1 {
        v
    } else if base % 2 != 0 {
        1
    } else {
        2
    }
}

/// Builds `Crit_j` one variable at a time. Standard monomials of the first
/// `j − 1` variables are extended by `x_j^e`; `t·x_j^e` is critical exactly
/// when `e` equals the pinned exponent of `t`, and lies in the ideal exactly
/// when some divisor of `t` pins an exponent in `1..=e`.
pub fn crit_sets(n: usize, m: &DegreeVector, k: u32) -> Result<CritSets> {
    validate(n, m, k)?;
    let mut per_j = Vec::with_capacity(n);
    let mut pure_powers = Vec::new();
    let mut standard = vec![Monomial::one(n)];
    for j in 1..=n {
        let mj = m.get(j);
        let base = k as i64 + m.socle(j - 1) as i64;
        let mut crit = Vec::new();
        let mut next = Vec::with_capacity(standard.len() * mj as usize);
        for t in &standard {
            let dt = t.degree();
            let pin = pinned_exponent(m, k, j, dt);
            if pin >= 1 && pin < mj as i64 {
                let mut e = t.exps().to_vec();
                e[j - 1] = pin as u32;
                crit.push(Monomial::new(e));
            }
            let lo = least_positive_pin(base, dt);
            for e in 0..mj {
                if e >= 1 && lo <= e as i64 {
                    break;
                }
                let mut ex = t.exps().to_vec();
                ex[j - 1] = e;
                next.push(Monomial::new(ex));
            }
        }
        TermOrder::grevlex(n).sort_desc(&mut crit);
        per_j.push(crit);
        if pure_power_retained(m, k, j) {
            pure_powers.push(Monomial::var_power(n, j - 1, mj));
        }
        standard = next;
    }
    Ok(CritSets { per_j, pure_powers })
}

/// The `j`-truncation condition defining the bar-sets:
/// `x_j | s` and `s_j = 2·deg(s_{≤j}) − k − Σ_{i<j} m_i + (j − 1)`.
pub fn in_crit_bar(s: &Monomial, m: &DegreeVector, k: u32, j: usize) -> bool {
    let sj = s.exp(j - 1) as i64;
    let rhs = 2 * s.prefix_degree(j) as i64 - k as i64 - m.as_slice()[..j - 1].iter().map(|&x| x as i64).sum::<i64>()
        + (j as i64 - 1);
    s.is_m_free(m) && sj > 0 && sj == rhs
}

/// `Crit_j` from the truncation predicate: monomials in the first `j`
/// variables satisfying the `j`-th condition whose proper initial segments
/// have non-critical paths. Excluding only the earlier bar-sets is not
/// enough: for `m = (3,2,2,3)`, `k = 1` it would keep `x1^2*x4`, a multiple of `x1`.
pub fn crit_sets_by_definition(n: usize, m: &DegreeVector, k: u32) -> Result<CritSets> {
    validate(n, m, k)?;
    let lines: Vec<RedLine> = (1..=n).map(|l| RedLine::new(&m.prefix(l), k)).collect::<Result<_>>()?;
    let prefix_critical = |s: &Monomial, l: usize| -> bool {
        let p = m.prefix(l);
        let t = Monomial::new(s.exps()[..l].to_vec());
        is_critical(&monomial_to_path(&t, &p).unwrap(), &lines[l - 1])
    };
    let mut per_j = Vec::with_capacity(n);
    let mut pure_powers = Vec::new();
    for j in 1..=n {
        let mut crit = Vec::new();
        let prefix = m.prefix(j);
        for d in 1..=prefix.socle(j) {
            for s in enumerate_m_free(&prefix, d) {
                let s = s.resize(n);
                if in_crit_bar(&s, m, k, j) && !(1..j).any(|l| prefix_critical(&s, l)) {
                    crit.push(s);
                }
            }
        }
        TermOrder::grevlex(n).sort_desc(&mut crit);
        per_j.push(crit);
        if pure_power_retained(m, k, j) {
            pure_powers.push(Monomial::var_power(n, j - 1, m.get(j)));
        }
    }
    Ok(CritSets { per_j, pure_powers })
}

/// `Some(j)` when `s` belongs to `Crit_j`: it satisfies the `j`-th truncation
/// condition for `j = max_index(s)` and no proper initial segment of its
/// path is critical.
pub fn crit_index(s: &Monomial, m: &DegreeVector, k: u32) -> Option<usize> {
    let j = s.max_index();
    if j == 0 || !s.is_m_free(m) || !in_crit_bar(s, m, k, j) {
        return None;
    }
    for l in 1..j {
        let p = m.prefix(l);
        let t = Monomial::new(s.exps()[..l].to_vec());
        let r = RedLine::new(&p, k).ok()?;
        if is_critical(&monomial_to_path(&t, &p).ok()?, &r) {
            return None;
        }
    }
    Some(j)
}

/// A monomial ideal stored by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    min_gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize `gens` and sort descending in graded revlex.
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by_key(Monomial::degree);
        all.dedup();
        let mut min: Vec<Monomial> = Vec::new();
        for g in all {
            if !min.iter().any(|h| h.divides(&g)) {
                min.push(g);
            }
        }
        TermOrder::grevlex(n).sort_desc(&mut min);
        MonomialIdeal { n, min_gens: min }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn min_gens(&self) -> &[Monomial] {
        &self.min_gens
    }

    pub fn contains(&self, s: &Monomial) -> bool {
        self.min_gens.iter().any(|g| g.divides(s))
    }

    pub fn is_antichain(&self) -> bool {
        self.min_gens.iter().enumerate().all(|(i, a)| {
            self.min_gens
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !a.divides(b))
        })
    }

    /// `dim (R/J)_d`, assuming the ideal contains every `x_i^{m_i}`.
    pub fn hf_within(&self, m: &DegreeVector, d: u32) -> u64 {
        enumerate_m_free(m, d)
            .iter()
            .filter(|s| !self.contains(s))
            .count() as u64
    }

    /// Hilbert series of `R/J` with trailing zeros trimmed, same assumption.
    pub fn hs_within(&self, m: &DegreeVector) -> Vec<u64> {
        let mut hs: Vec<u64> = (0..=m.socle(m.n())).map(|d| self.hf_within(m, d)).collect();
        while hs.last() == Some(&0) {
            hs.pop();
        }
        hs
    }

    /// Relabel variables: `x_i` becomes `x_{target[i]}` (zero-based).
    pub fn relabel(&self, target: &[usize]) -> MonomialIdeal {
        MonomialIdeal::new(self.n, self.min_gens.iter().map(|g| g.relabel(target)))
    }
}

/// `S_{n,m,k}`: the retained pure powers together with all critical monomials.
pub fn minimal_generators(n: usize, m: &DegreeVector, k: u32) -> Result<MonomialIdeal> {
    let c = crit_sets(n, m, k)?;
    Ok(MonomialIdeal::new(
        n,
        c.pure_powers.iter().cloned().chain(c.all().cloned()),
    ))
}

/// The initial ideal for a graded order whose largest variable is
/// `ranking[0]`: computed in the canonical frame and relabelled back.
pub fn minimal_generators_ranked(m: &DegreeVector, k: u32, ranking: &[usize]) -> Result<MonomialIdeal> {
    let canon = m.permuted(ranking);
    Ok(minimal_generators(m.n(), &canon, k)?.relabel(ranking))
}

/// Brute force: minimal generators of the ideal spanned by all monomials
/// with a critical path together with the pure powers.
pub fn minimal_generators_by_paths(n: usize, m: &DegreeVector, k: u32) -> Result<MonomialIdeal> {
    validate(n, m, k)?;
    let r = RedLine::new(m, k)?;
    let mut gens: Vec<Monomial> = (0..n).map(|i| Monomial::var_power(n, i, m.as_slice()[i])).collect();
    for d in 0..=m.socle(n) {
        for s in enumerate_m_free(m, d) {
            if is_critical(&monomial_to_path(&s, m)?, &r) {
                gens.push(s);
            }
        }
    }
    Ok(MonomialIdeal::new(n, gens))
}

/// `dim (R/(M_{n,m,k}))_d`: the number of non-critical paths ending at `(n, n − d)`.
pub fn hf_quotient(n: usize, m: &DegreeVector, k: u32, d: u32) -> Result<u64> {
    validate(n, m, k)?;
    let r = RedLine::new(m, k)?;
    let mut c = 0;
    for s in enumerate_m_free(m, d) {
        if !is_critical(&monomial_to_path(&s, m)?, &r) {
            c += 1;
        }
    }
    Ok(c)
}

/// Full Hilbert series of `R/(M_{n,m,k})` by path counting, trailing zeros trimmed.
pub fn hs_quotient(n: usize, m: &DegreeVector, k: u32) -> Result<Vec<u64>> {
    let mut hs = Vec::new();
    for d in 0..=m.socle(n) {
        hs.push(hf_quotient(n, m, k, d)?);
    }
    while hs.last() == Some(&0) {
        hs.pop();
    }
    Ok(hs)
}

/// Degree-indexed counts of standard monomials and of `Crit_j` for every `j`,
/// computed by the same recursion as [`crit_sets`] but on counts only.
/// Returns `(standard, crit)` where `crit[j − 1][d]` counts `Crit_j` in degree `d`.
pub fn crit_counts(m: &DegreeVector, k: u32) -> (Vec<u128>, Vec<Vec<u128>>) {
    let mut standard: Vec<u128> = vec![1];
    let mut crit = Vec::with_capacity(m.n());
    for j in 1..=m.n() {
        let mj = m.get(j);
        let base = k as i64 + m.socle(j - 1) as i64;
        let mut next = vec![0u128; standard.len() + mj as usize];
        let mut cj = vec![0u128; standard.len() + mj as usize];
        for (dt, &cnt) in standard.iter().enumerate() {
            if cnt == 0 {
                continue;
            }
            let pin = base - 2 * dt as i64;
            if pin >= 1 && pin < mj as i64 {
                cj[dt + pin as usize] += cnt;
            }
            let lo = least_positive_pin(base, dt as u32);
            for e in 0..mj {
                if e >= 1 && lo <= e as i64 {
                    break;
                }
                next[dt + e as usize] += cnt;
            }
        }
        while next.last() == Some(&0) {
            next.pop();
        }
        while cj.last() == Some(&0) {
            cj.pop();
        }
        crit.push(cj);
        standard = next;
    }
    (standard, crit)
}

/// Every critical generator `u·x_j` and `i < j` with `u·x_i` `m`-free has `u·x_i` in the ideal.
pub fn check_strongly_m_stable(n: usize, m: &DegreeVector, k: u32) -> Result<bool> {
    let ideal = minimal_generators(n, m, k)?;
    for g in ideal.min_gens().iter().filter(|g| g.is_m_free(m)) {
        for j in 0..n {
            if g.exp(j) == 0 {
                continue;
            }
            for i in 0..j {
                let mut e = g.exps().to_vec();
                e[j] -= 1;
                e[i] += 1;
                let t = Monomial::new(e);
                if t.is_m_free(m) && !ideal.contains(&t) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Every monomial of the same degree that is larger in graded revlex than an
/// `m`-free minimal generator lies in the ideal.
pub fn check_revlex_segment(n: usize, m: &DegreeVector, k: u32) -> Result<bool> {
    let ideal = minimal_generators(n, m, k)?;
    let order = TermOrder::grevlex(n);
    for g in ideal.min_gens().iter().filter(|g| g.is_m_free(m)) {
        for t in enumerate_monomials(n, g.degree()) {
            if order.cmp(&t, g).is_gt() && !ideal.contains(&t) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: &[u32]) -> DegreeVector {
        DegreeVector::new(v.to_vec()).unwrap()
    }

    fn monos(n: usize, s: &[&str]) -> Vec<Monomial> {
        s.iter().map(|t| Monomial::parse(n, t).unwrap()).collect()
    }

    #[test]
    fn m_free_counts() {
        let m = dv(&[3, 2, 2, 3]);
        assert_eq!(enumerate_m_free(&m, 6).len(), 1);
        assert_eq!(enumerate_m_free(&m, 3).len(), 10);
        assert_eq!(enumerate_m_free(&dv(&[2, 2]), 1), monos(2, &["x1", "x2"]));
        assert!(enumerate_m_free(&m, 7).is_empty());
    }

    #[test]
    fn example_crit_sets() {
        let m = dv(&[3, 2, 2, 3]);
        let c = crit_sets(4, &m, 2).unwrap();
        assert_eq!(c.per_j[0], monos(4, &["x1^2"]));
        assert_eq!(c.per_j[1], Vec::<Monomial>::new());
        assert_eq!(c.per_j[2], monos(4, &["x1*x2*x3"]));
        let mut last = c.per_j[3].clone();
        last.sort();
        let mut want = monos(4, &["x2*x3*x4^2", "x1*x3*x4^2", "x1*x2*x4^2"]);
        want.sort();
        assert_eq!(last, want);
        assert_eq!(c.pure_powers, monos(4, &["x2^2", "x3^2", "x4^3"]));
    }

    #[test]
    fn three_routes_agree() {
        for mv in [vec![3, 2, 2, 3], vec![2, 3, 4], vec![4, 4, 2], vec![2, 2, 2, 2, 2]] {
            let m = dv(&mv);
            let n = m.n();
            for k in 1..=5 {
                let rec = crit_sets(n, &m, k).unwrap();
                assert_eq!(rec, crit_sets_by_definition(n, &m, k).unwrap(), "{mv:?} k={k}");
                assert_eq!(
                    minimal_generators(n, &m, k).unwrap(),
                    minimal_generators_by_paths(n, &m, k).unwrap(),
                    "{mv:?} k={k}"
                );
            }
        }
    }

    #[test]
    fn example_hf() {
        let m = dv(&[3, 2, 2, 3]);
        assert_eq!(hf_quotient(4, &m, 2, 0).unwrap(), 1);
        assert_eq!(hf_quotient(4, &m, 2, 2).unwrap(), 7);
        assert_eq!(hf_quotient(4, &m, 2, 4).unwrap(), 0);
        assert_eq!(hs_quotient(4, &m, 2).unwrap(), vec![1, 4, 7, 6]);
        let (std, _) = crit_counts(&m, 2);
        assert_eq!(std, vec![1, 4, 7, 6]);
    }

    #[test]
    fn membership_and_structure() {
        let m = dv(&[3, 2, 2, 3]);
        let ideal = minimal_generators(4, &m, 2).unwrap();
        assert_eq!(ideal.min_gens().len(), 8);
        assert!(ideal.is_antichain());
        assert!(ideal.contains(&Monomial::parse(4, "x1*x2*x3*x4").unwrap()));
        assert!(!ideal.contains(&Monomial::parse(4, "x1*x4").unwrap()));
        assert!(check_strongly_m_stable(4, &m, 2).unwrap());
        assert!(check_revlex_segment(4, &m, 2).unwrap());
        assert_eq!(
            minimal_generators(1, &dv(&[5]), 2).unwrap().min_gens(),
            &monos(1, &["x1^2"])[..]
        );
    }

    #[test]
    fn large_k_gives_pure_powers() {
        let m = dv(&[3, 3]);
        let c = crit_sets(2, &m, 5).unwrap();
        assert!(c.is_empty());
        assert_eq!(c.pure_powers.len(), 2);
    }
}
