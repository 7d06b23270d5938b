//! Hilbert series of monomial complete intersections and their truncations.

use crate::algebra::DegreeVector;
use crate::error::{Error, Result};

/// A polynomial Hilbert series with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<i64>,
}

impl Series {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Series { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `t^d`; zero outside the stored range, including `d < 0`.
    pub fn coeff(&self, d: i64) -> i64 {
        if d < 0 {
            return 0;
        }
        self.coeffs.get(d as usize).copied().unwrap_or(0)
    }

    /// Index of the last nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn is_unimodal(&self) -> bool {
        let c = &self.coeffs;
        let peak = c.windows(2).position(|w| w[1] < w[0]).unwrap_or(c.len());
        c[peak..].windows(2).all(|w| w[1] <= w[0])
    }
}

/// `Π_i (1 + t + ⋯ + t^{m_i − 1})`.
pub fn hs_complete_intersection(m: &DegreeVector) -> Series {
    let mut c = vec![1i64];
    for &mi in m.as_slice() {
        let mut next = vec![0i64; c.len() + mi as usize - 1];
        for (i, &a) in c.iter().enumerate() {
            for e in 0..mi as usize {
                next[i + e] += a;
            }
        }
        c = next;
    }
    Series::new(c)
}

/// `HF(R/P_m, d)`, the number of `m`-free monomials of degree `d`.
pub fn hf_complete_intersection(m: &DegreeVector, d: i64) -> i64 {
    hs_complete_intersection(m).coeff(d)
}

/// `(1 − t^k)·hs` cut before its first coefficient `≤ 0`.
pub fn truncate_lefschetz(hs: &Series, k: u32) -> Series {
    let mut out = Vec::new();
    let len = hs.coeffs.len() + k as usize;
    for d in 0..len as i64 {
        let v = hs.coeff(d) - hs.coeff(d - k as i64);
        if v <= 0 {
            break;
        }
        out.push(v);
    }
    Series::new(out)
}

/// The two invariants `σ_j = max m_i` and `τ_j = D_j − (σ_j − 1)` of a prefix,
/// and the type of the next index `j + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeInfo {
    pub sigma: u32,
    pub tau: u32,
    pub kind: LefschetzType,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LefschetzType {
    Type1,
    Type2,
}

/// Classify the index following `m_prefix` (so an empty prefix classifies
/// `n = 1`).
pub fn type_classify(m_prefix: &[u32], k: u32) -> TypeInfo {
    let (sigma, tau) = if m_prefix.is_empty() {
        (0, 0)
    } else {
        let sigma = *m_prefix.iter().max().unwrap();
        let d: u32 = m_prefix.iter().map(|x| x - 1).sum();
        (sigma, d - (sigma - 1))
    };
    let kind = if k as i64 >= sigma as i64 - tau as i64 - 1 {
        LefschetzType::Type1
    } else {
        LefschetzType::Type2
    };
    TypeInfo { sigma, tau, kind }
}

/// The type of the one-based index `n` for the exponent sequence `m`.
pub fn type_of(m: &DegreeVector, k: u32, n: usize) -> LefschetzType {
    type_classify(&m.as_slice()[..n - 1], k).kind
}

/// `δ_j` from the two-case closed formula, capped at `D_j`.
pub fn delta_formula(m: &DegreeVector, k: u32, j: usize) -> u32 {
    if j == 0 {
        return 0;
    }
    let dj = m.socle(j);
    let info = type_classify(&m.as_slice()[..j], k);
    let raw = match info.kind {
        LefschetzType::Type1 => (dj + k - 1) / 2,
        LefschetzType::Type2 => info.tau + k - 1,
    };
    raw.min(dj)
}

/// `δ_j` as the last index of the truncated series.
pub fn delta_truncation(m: &DegreeVector, k: u32, j: usize) -> u32 {
    let hs = hs_complete_intersection(&m.prefix(j));
    truncate_lefschetz(&hs, k).degree().unwrap_or(0) as u32
}

/// `(D_j, δ_j)`, failing if the closed formula and the truncation disagree.
pub fn socle_degrees(m: &DegreeVector, k: u32, j: usize) -> Result<(u32, u32)> {
    if j > m.n() {
        return Err(Error::IndexOutOfRange { index: j, max: m.n() });
    }
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    let f = delta_formula(m, k, j);
    let t = delta_truncation(m, k, j);
    if f != t {
        return Err(Error::Inconsistent(format!(
            "socle degree formula gives {f}, truncation gives {t} for m={:?}, k={k}, j={j}",
            m.as_slice()
        )));
    }
    Ok((m.socle(j), f))
}
