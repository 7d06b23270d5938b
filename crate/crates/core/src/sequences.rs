//! Degree sequences of the reduced basis and the classical number families they produce.

use std::collections::BTreeMap;

use crate::algebra::DegreeVector;
use crate::combinat::series_mul;
use crate::error::{Error, Result};
use crate::hilbert::{hf_complete_intersection, socle_degrees, type_classify, LefschetzType};
use crate::initial::{crit_counts, crit_sets, hf_quotient};

/// An exponent sequence `m_1, m_2, …`: either a finite vector, beyond which
/// nothing may be asked, or a finite prefix followed by a constant tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MSpec {
    Finite(DegreeVector),
    Eventually { prefix: Vec<u32>, tail: u32 },
}

impl MSpec {
    pub fn equigenerated(m: u32) -> Result<Self> {
        Self::eventually(Vec::new(), m)
    }

    pub fn eventually(prefix: Vec<u32>, tail: u32) -> Result<Self> {
        DegreeVector::new(prefix.clone())?;
        DegreeVector::new(vec![tail])?;
        Ok(MSpec::Eventually { prefix, tail })
    }

    /// `m_i` for a one-based index, if the specification reaches it.
    pub fn get(&self, i: usize) -> Option<u32> {
        match self {
            MSpec::Finite(m) => m.as_slice().get(i - 1).copied(),
            MSpec::Eventually { prefix, tail } => Some(prefix.get(i - 1).copied().unwrap_or(*tail)),
        }
    }

    /// The first `len` entries.
    pub fn vector(&self, len: usize) -> Result<DegreeVector> {
        match self {
            MSpec::Finite(m) if len > m.n() => Err(Error::SequenceTooShort(format!(
                "need {len} entries, have {}",
                m.n()
            ))),
            MSpec::Finite(m) => Ok(m.prefix(len)),
            MSpec::Eventually { .. } => DegreeVector::new((1..=len).map(|i| self.get(i).unwrap()).collect()),
        }
    }
}

/// The generators whose leading monomial has last variable `x_ν`, described by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub nu: usize,
    /// `D_{ν−1}` and `δ_{ν−1}`.
    pub socle_prev: u32,
    pub delta_prev: u32,
    /// Minimal `x_ν`-exponent `k + D_{ν−1} − 2δ_{ν−1}`.
    pub s_min: i64,
    pub d_min: i64,
    /// `None` when the level is empty.
    pub d_max: Option<i64>,
}

/// Degree data of level `ν` (one-based); needs `m_1, …, m_ν`.
pub fn level(spec: &MSpec, k: u32, nu: usize) -> Result<Level> {
    let prev = spec.vector(nu - 1)?;
    let (dp, delta) = socle_degrees(&prev, k, nu - 1)?;
    let d_min = k as i64 + dp as i64 - delta as i64;
    let s_min = k as i64 + dp as i64 - 2 * delta as i64;
    let m_nu = spec
        .get(nu)
        .ok_or_else(|| Error::SequenceTooShort(format!("m_{nu} is not specified")))? as i64;
    let d_max = (s_min < m_nu).then(|| d_min + ((m_nu - 1 - s_min) / 2).min(delta as i64));
    Ok(Level {
        nu,
        socle_prev: dp,
        delta_prev: delta,
        s_min,
        d_min,
        d_max,
    })
}

/// Number of degree-`d` elements in level `lv`: `HF(R/I_{ν−1}, δ_{ν−1} − γ)` with `γ = d − d_min`.
fn level_count(spec: &MSpec, k: u32, lv: &Level, d: i64) -> Result<u128> {
    match lv.d_max {
        Some(hi) if d >= lv.d_min && d <= hi => {
            let prev = spec.vector(lv.nu - 1)?;
            let t = lv.delta_prev as i64 - (d - lv.d_min);
            let v = hf_complete_intersection(&prev, t) - hf_complete_intersection(&prev, t - k as i64);
            Ok(v.max(0) as u128)
        }
        _ => Ok(0),
    }
}

/// Levels whose minimal degree is at most `d`. Errors if the specification
/// ends before that set is determined.
fn levels_up_to(spec: &MSpec, k: u32, d: i64) -> Result<Vec<Level>> {
    let mut out = Vec::new();
    for nu in 1.. {
        if spec.vector(nu - 1).is_err() {
            return Err(Error::SequenceTooShort(format!(
                "degree {d} may need more than {} variables",
                nu - 1
            )));
        }
        let prev = spec.vector(nu - 1)?;
        let (dp, delta) = socle_degrees(&prev, k, nu - 1)?;
        if k as i64 + dp as i64 - delta as i64 > d {
            break;
        }
        out.push(level(spec, k, nu)?);
    }
    Ok(out)
}

/// `g_{m,k}(d)`: the number of `m`-free leading monomials of degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    pub k: u32,
    pub values: BTreeMap<u32, u128>,
}

impl DegreeSequence {
    pub fn get(&self, d: u32) -> u128 {
        self.values.get(&d).copied().unwrap_or(0)
    }

    /// Values from degree `from` through the last stored degree.
    pub fn values_from(&self, from: u32) -> Vec<u128> {
        let last = self.values.keys().next_back().copied().unwrap_or(0);
        (from..=last).map(|d| self.get(d)).collect()
    }
}

/// `g_{m,k}(d)` for `0 ≤ d ≤ d_max` from Hilbert-function differences.
pub fn gb_degree_sequence(spec: &MSpec, k: u32, d_max: u32) -> Result<DegreeSequence> {
    check_k(k)?;
    let levels = levels_up_to(spec, k, d_max as i64)?;
    let mut values = BTreeMap::new();
    for d in 0..=d_max {
        let mut total = 0;
        for lv in &levels {
            total += level_count(spec, k, lv, d as i64)?;
        }
        values.insert(d, total);
    }
    Ok(DegreeSequence { k, values })
}

/// The same sequence by counting critical monomials directly.
pub fn gb_degree_sequence_by_crit(spec: &MSpec, k: u32, d_max: u32) -> Result<DegreeSequence> {
    check_k(k)?;
    let n = levels_up_to(spec, k, d_max as i64)?.len();
    let (_, crit) = crit_counts(&spec.vector(n)?, k);
    let mut values = BTreeMap::new();
    for d in 0..=d_max {
        values.insert(d, crit.iter().map(|c| c.get(d as usize).copied().unwrap_or(0)).sum());
    }
    Ok(DegreeSequence { k, values })
}

/// The unique level holding degree-`d` generators, `max{ν : (D_{ν−1} + k)/2 < d}`
/// when every index `ν > 1` involved is of Type 1, else the general level scan.
pub fn n_of_degree(d: u32, spec: &MSpec, k: u32) -> Result<usize> {
    check_k(k)?;
    let mut best = None;
    for nu in 1.. {
        let prev = spec.vector(nu - 1).map_err(|_| {
            Error::SequenceTooShort(format!("cannot bound the level of degree {d}"))
        })?;
        if (prev.socle(nu - 1) + k) as i64 >= 2 * d as i64 {
            break;
        }
        if nu > 1 && type_classify(prev.as_slice(), k).kind == LefschetzType::Type2 {
            return level_of_degree(d, spec, k);
        }
        best = Some(nu);
    }
    best.ok_or_else(|| Error::Precondition(format!("no level below degree {d}")))
}

/// The level whose degree range contains `d`, by scanning all levels.
pub fn level_of_degree(d: u32, spec: &MSpec, k: u32) -> Result<usize> {
    levels_up_to(spec, k, d as i64)?
        .iter()
        .find(|lv| lv.d_max.is_some_and(|hi| lv.d_min <= d as i64 && d as i64 <= hi))
        .map(|lv| lv.nu)
        .ok_or_else(|| Error::Precondition(format!("no generators of degree {d}")))
}

/// Maximal degree of a basis element with `m`-free leading monomial in `n = m.n()` variables.
pub fn max_gb_degree(m: &DegreeVector, k: u32) -> Result<u32> {
    check_k(k)?;
    let spec = MSpec::Finite(m.clone());
    let mut best = None;
    for q in 1..=m.n() {
        let lv = level(&spec, k, q)?;
        let prev = m.prefix(q - 1);
        let t = lv.delta_prev as i64;
        let hf = hf_complete_intersection(&prev, t) - hf_complete_intersection(&prev, t - k as i64);
        if lv.d_max.is_some() && hf > 0 {
            best = lv.d_max;
        }
    }
    best.map(|d| d as u32)
        .ok_or_else(|| Error::Precondition("no m-free generators".into()))
}

/// The equigenerated shortcut: `k` if `n = 1` and `k < m`, else `⌈(D_n + k − 1)/2⌉`.
/// For `n = 2`, `k = 1` the basis is `{x1 + x2, x2^m}`, so the answer is 1.
/// `None` when there is no `m`-free generator at all (`k > D_n`).
pub fn max_gb_degree_equigenerated(m: u32, n: usize, k: u32) -> Option<u32> {
    let socle = n as u32 * (m - 1);
    if k == 0 || k > socle {
        return None;
    }
    if n == 1 {
        return Some(k);
    }
    if n == 2 && k == 1 {
        return Some(1);
    }
    Some((socle + k - 1).div_ceil(2))
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    Ok(())
}

pub fn motzkin(n: usize) -> u128 {
    motzkin_row(n)[n]
}

/// `M(0), …, M(n)`.
pub fn motzkin_row(n: usize) -> Vec<u128> {
    let mut m = vec![1u128];
    for i in 1..=n {
        let mut v = m[i - 1];
        for j in 0..i.saturating_sub(1) {
            v += m[j] * m[i - 2 - j];
        }
        m.push(v);
    }
    m
}

pub fn riordan(n: usize) -> u128 {
    riordan_row(n)[n]
}

/// `R(0), …, R(n)`.
pub fn riordan_row(n: usize) -> Vec<u128> {
    let mut r = vec![1u128, 0];
    for i in 2..=n {
        let i128_ = i as u128;
        r.push((i128_ - 1) * (2 * r[i - 1] + 3 * r[i - 2]) / (i128_ + 1));
    }
    r.truncate(n + 1);
    r
}

pub fn catalan(n: usize) -> u128 {
    catalan_row(n)[n]
}

pub fn catalan_row(n: usize) -> Vec<u128> {
    let mut c = vec![1u128];
    for i in 1..=n as u128 {
        let prev = *c.last().unwrap();
        c.push(prev * 2 * (2 * i - 1) / (i + 1));
    }
    c
}

/// `⌈k/2⌉`: the shift that makes `g_{3,k}(0)` the first nonzero count.
pub fn cube_shift(k: u32) -> usize {
    k.div_ceil(2) as usize
}

/// `|Crit_j|` for `j = ν` from Hilbert-function differences, summed over degrees.
pub fn level_size(spec: &MSpec, k: u32, nu: usize) -> Result<u128> {
    let lv = level(spec, k, nu)?;
    let mut total = 0;
    if let Some(hi) = lv.d_max {
        for d in lv.d_min..=hi {
            total += level_count(spec, k, &lv, d)?;
        }
    }
    Ok(total)
}

/// `g_{3,k}(0), …, g_{3,k}(n_max)` with `g_{3,k}(n) = |Crit_{n + ⌈k/2⌉}|` for `m = (3, 3, …)`.
pub fn g3k(k: u32, n_max: usize) -> Result<Vec<u128>> {
    check_k(k)?;
    let spec = MSpec::equigenerated(3)?;
    (0..=n_max).map(|n| level_size(&spec, k, n + cube_shift(k))).collect()
}

/// `g_{3,k}` by enumerating the critical monomials themselves.
pub fn g3k_by_enumeration(k: u32, n_max: usize) -> Result<Vec<u128>> {
    check_k(k)?;
    (0..=n_max)
        .map(|n| {
            let j = n + cube_shift(k);
            let m = DegreeVector::equigenerated(3, j)?;
            Ok(crit_sets(j, &m, k)?.per_j[j - 1].len() as u128)
        })
        .collect()
}

/// `GF(M)^q · GF(R)^r` with `k = 2q + r`, up to `n_max`.
pub fn motzkin_riordan_convolution(k: u32, n_max: usize) -> Vec<u128> {
    let len = n_max + 1;
    let m: Vec<i128> = motzkin_row(n_max).into_iter().map(|v| v as i128).collect();
    let r: Vec<i128> = riordan_row(n_max).into_iter().map(|v| v as i128).collect();
    let mut acc = vec![0i128; len];
    acc[0] = 1;
    for _ in 0..k / 2 {
        acc = series_mul(&acc, &m, len);
    }
    if k % 2 == 1 {
        acc = series_mul(&acc, &r, len);
    }
    acc.into_iter().map(|v| v as u128).collect()
}

/// `g_{3,k}` equals the Motzkin/Riordan convolution termwise up to `n_max`.
pub fn convolution_check(k: u32, n_max: usize) -> Result<bool> {
    Ok(g3k(k, n_max)? == motzkin_riordan_convolution(k, n_max))
}

/// `Σ` over `k`-tuples of Catalan numbers, i.e. the coefficients of `C(x)^k`.
pub fn catalan_power(k: u32, n_max: usize) -> Vec<u128> {
    let len = n_max + 1;
    let c: Vec<i128> = catalan_row(n_max).into_iter().map(|v| v as i128).collect();
    let mut acc = vec![0i128; len];
    acc[0] = 1;
    for _ in 0..k {
        acc = series_mul(&acc, &c, len);
    }
    acc.into_iter().map(|v| v as u128).collect()
}

/// For `m = (2, 2, …)`, `g_{m,k}(k + n)` equals the `(k − 1)`-fold self-convolution
/// of the Catalan numbers at `n`, for `n ≤ n_max`.
pub fn catalan_convolution_check_m2(k: u32, n_max: usize) -> Result<bool> {
    check_k(k)?;
    let seq = gb_degree_sequence(&MSpec::equigenerated(2)?, k, k + n_max as u32)?;
    let ours: Vec<u128> = (0..=n_max).map(|n| seq.get(k + n as u32)).collect();
    Ok(ours == catalan_power(k, n_max) && (0..k).all(|d| seq.get(d) == 0))
}

/// Rows `0..=n_max` of the `s`-Catalan triangle for `s = m − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalanTriangle {
    pub s: u32,
    pub rows: Vec<Vec<u128>>,
}

impl CatalanTriangle {
    /// First column: the `s`-Catalan numbers.
    pub fn first_column(&self) -> Vec<u128> {
        self.rows.iter().map(|r| r[0]).collect()
    }

    pub fn row_is_log_concave(row: &[u128]) -> bool {
        row.windows(3).all(|w| w[1] * w[1] >= w[0] * w[2])
    }

    pub fn log_concavity_check(&self) -> bool {
        self.rows.iter().all(|r| Self::row_is_log_concave(r))
    }
}

/// `C^{(s)}_{n,k} = HF(R/P_{2n}, sn + k) − HF(R/P_{2n}, sn + k + 1)` for `m = s + 1`.
pub fn s_catalan_triangle(m: u32, n_max: usize) -> Result<CatalanTriangle> {
    let s = m - 1;
    let mut rows = vec![vec![1u128]];
    for n in 1..=n_max {
        let p = DegreeVector::equigenerated(m, 2 * n)?;
        let base = (s as usize * n) as i64;
        let mut row = Vec::new();
        for k in 0.. {
            let v = hf_complete_intersection(&p, base + k) - hf_complete_intersection(&p, base + k + 1);
            if v <= 0 {
                break;
            }
            row.push(v as u128);
        }
        rows.push(row);
    }
    Ok(CatalanTriangle { s, rows })
}

/// Row `n ≥ 1` counted as standard monomials of `R/in(I_{2n,m,1})` in degrees `sn − k`.
pub fn s_catalan_row_by_paths(m: u32, n: usize) -> Result<Vec<u128>> {
    let s = m - 1;
    let mv = DegreeVector::equigenerated(m, 2 * n)?;
    let top = s * n as u32;
    let mut row = Vec::new();
    for k in 0..=top {
        let v = hf_quotient(2 * n, &mv, 1, top - k)?;
        if v == 0 {
            break;
        }
        row.push(v as u128);
    }
    Ok(row)
}

/// Degeneracy of spin-zero states for `N` particles of spin `σ = sigma2/2`:
/// `g_{m,1}(σN + 1)` with `m = 2σ + 1`, and zero when `σN` is not an integer.
pub fn spin_catalan_degeneracy(sigma2: u32, particles: u32) -> Result<u128> {
    if sigma2 == 0 {
        return Err(Error::InvalidParameters("spin must be positive".into()));
    }
    if sigma2 * particles % 2 == 1 {
        return Ok(0);
    }
    let d = sigma2 * particles / 2 + 1;
    Ok(gb_degree_sequence(&MSpec::equigenerated(sigma2 + 1)?, 1, d)?.get(d))
}

/// Direct count of paths `(0,0) → (N,0)` with steps `σ, σ−1, …, −σ`, never below
/// the axis, with `|j₁ − σ| ≤ j₂ ≤ j₁ + σ` on every step. Heights are doubled.
pub fn spin_paths_count(sigma2: u32, particles: u32) -> u128 {
    let s = sigma2 as i64;
    let mut cur: BTreeMap<i64, u128> = BTreeMap::from([(0, 1)]);
    for _ in 0..particles {
        let mut next = BTreeMap::new();
        for (&h, &c) in &cur {
            for e in 0..=s {
                let h2 = h + s - 2 * e;
                if h2 >= 0 && (h - s).abs() <= h2 && h2 <= h + s {
                    *next.entry(h2).or_insert(0) += c;
                }
            }
        }
        cur = next;
    }
    cur.get(&0).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_sequence() {
        let spec = MSpec::eventually(vec![3, 2, 2, 3], 3).unwrap();
        let g = gb_degree_sequence(&spec, 2, 4).unwrap();
        assert_eq!((g.get(0), g.get(1), g.get(2), g.get(3), g.get(4)), (0, 0, 1, 1, 3));
        assert_eq!(g, gb_degree_sequence_by_crit(&spec, 2, 4).unwrap());
    }

    #[test]
    fn finite_spec_too_short() {
        let spec = MSpec::Finite(DegreeVector::new(vec![3, 2]).unwrap());
        assert!(matches!(gb_degree_sequence(&spec, 2, 6), Err(Error::SequenceTooShort(_))));
    }

    #[test]
    fn classical_tables() {
        assert_eq!(motzkin_row(8), vec![1, 1, 2, 4, 9, 21, 51, 127, 323]);
        assert_eq!(riordan_row(8), vec![1, 0, 1, 1, 3, 6, 15, 36, 91]);
        assert_eq!(catalan_row(5), vec![1, 1, 2, 5, 14, 42]);
        assert_eq!(riordan_row(0), vec![1]);
    }

    #[test]
    fn levels_and_degrees() {
        let eq3 = MSpec::equigenerated(3).unwrap();
        assert_eq!(n_of_degree(3, &eq3, 1).unwrap(), 3);
        assert_eq!(n_of_degree(1, &eq3, 1).unwrap(), 1);
        assert_eq!(n_of_degree(4, &eq3, 2).unwrap(), 3);
        let m = DegreeVector::new(vec![2, 3, 2, 20, 3]).unwrap();
        assert_eq!(max_gb_degree(&m, 3).unwrap(), 7);
        assert_eq!(max_gb_degree(&DegreeVector::new(vec![5]).unwrap(), 3).unwrap(), 3);
        assert_eq!(max_gb_degree(&DegreeVector::equigenerated(3, 4).unwrap(), 1).unwrap(), 4);
        assert_eq!(max_gb_degree_equigenerated(3, 4, 1), Some(4));
        assert_eq!(max_gb_degree_equigenerated(3, 2, 1), Some(1));
        assert_eq!(max_gb_degree_equigenerated(3, 2, 5), None);
    }

    #[test]
    fn spin_examples() {
        assert_eq!(spin_catalan_degeneracy(2, 2).unwrap(), 1);
        assert_eq!(spin_catalan_degeneracy(2, 0).unwrap(), 1);
        assert_eq!(spin_catalan_degeneracy(2, 4).unwrap(), 3);
        assert_eq!(spin_paths_count(2, 4), 3);
        assert_eq!(spin_catalan_degeneracy(1, 3).unwrap(), 0);
    }

    #[test]
    fn triangle_basics() {
        let t = s_catalan_triangle(2, 5).unwrap();
        assert_eq!(t.first_column(), catalan_row(5));
        let t2 = s_catalan_triangle(3, 2).unwrap();
        assert!(t2.log_concavity_check());
        assert_eq!(t2.rows[2], s_catalan_row_by_paths(3, 2).unwrap());
    }
}
