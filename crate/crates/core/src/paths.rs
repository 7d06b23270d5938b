//! Admissible lattice paths, the red line and the reflection map.
//!
//! A monomial `s` with `s_i < m_i` is encoded as the path whose `i`-th step
//! has slope `1 − s_i`. The red line is stored in doubled coordinates so that
//! reflecting an integer height about it stays integral: `b' = y2[a] − b`.

use crate::algebra::{DegreeVector, Monomial};
use crate::error::{Error, Result};
use crate::initial::enumerate_m_free;

/// The piecewise linear red line, sampled at integer abscissae and doubled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RedLine {
    k: u32,
    m: DegreeVector,
    y2: Vec<i64>,
}

impl RedLine {
    pub fn new(m: &DegreeVector, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameters("k must be at least 1".into()));
        }
        let mut y2 = Vec::with_capacity(m.n() + 1);
        y2.push(-(k as i64));
        for &mi in m.as_slice() {
            let last = *y2.last().unwrap();
            y2.push(last + 3 - mi as i64);
        }
        Ok(RedLine { k, m: m.clone(), y2 })
    }

    pub fn n(&self) -> usize {
        self.m.n()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> &DegreeVector {
        &self.m
    }

    /// Doubled heights `2·L(a)` for `a = 0..=n`.
    pub fn y2(&self) -> &[i64] {
        &self.y2
    }

    /// Height of the reflection of `(a, b)`.
    #[inline]
    pub fn reflect_height(&self, a: usize, b: i64) -> i64 {
        self.y2[a] - b
    }

    /// Sign of `b − L(a)`: positive above, zero on, negative below the line.
    pub fn side(&self, a: usize, b: i64) -> std::cmp::Ordering {
        (2 * b).cmp(&self.y2[a])
    }
}

/// Build the red line for `(n, m, k)`; `n` must equal the length of `m`.
pub fn build_red_line(n: usize, m: &DegreeVector, k: u32) -> Result<RedLine> {
    if m.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: m.n(),
        });
    }
    RedLine::new(m, k)
}

/// A lattice path given by its vertex heights `b_0 = 0, b_1, …, b_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    heights: Vec<i64>,
    m: DegreeVector,
}

impl LatticePath {
    /// Wrap raw heights without checking admissibility.
    pub fn from_heights(heights: Vec<i64>, m: DegreeVector) -> Result<Self> {
        if heights.len() != m.n() + 1 {
            return Err(Error::DimensionMismatch {
                expected: m.n() + 1,
                got: heights.len(),
            });
        }
        Ok(LatticePath { heights, m })
    }

    pub fn n(&self) -> usize {
        self.m.n()
    }

    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn m(&self) -> &DegreeVector {
        &self.m
    }

    /// Vertices `(a, b_a)` for `a = 0..=n`.
    pub fn verts(&self) -> Vec<(i64, i64)> {
        self.heights
            .iter()
            .enumerate()
            .map(|(a, &b)| (a as i64, b))
            .collect()
    }

    pub fn endpoint(&self) -> (i64, i64) {
        (self.n() as i64, *self.heights.last().unwrap())
    }

    /// Slope of step `i` (one-based).
    pub fn slope(&self, i: usize) -> i64 {
        self.heights[i] - self.heights[i - 1]
    }

    pub fn is_admissible(&self) -> bool {
        self.heights[0] == 0
            && (1..=self.n()).all(|i| slope_admissible(self.slope(i), self.m.get(i)))
    }

    /// The monomial of an admissible path.
    pub fn to_monomial(&self) -> Result<Monomial> {
        if !self.is_admissible() {
            return Err(Error::Precondition("path is not admissible".into()));
        }
        Ok(Monomial::new(
            (1..=self.n()).map(|i| (1 - self.slope(i)) as u32).collect(),
        ))
    }

    /// The first `j` steps as a path for the prefix `m_1, …, m_j`.
    pub fn prefix(&self, j: usize) -> LatticePath {
        LatticePath {
            heights: self.heights[..=j].to_vec(),
            m: self.m.prefix(j),
        }
    }
}

#[inline]
fn slope_admissible(slope: i64, mi: u32) -> bool {
    slope <= 1 && slope >= 2 - mi as i64
}

pub fn monomial_to_path(s: &Monomial, m: &DegreeVector) -> Result<LatticePath> {
    if !s.is_m_free(m) {
        return Err(Error::NotMFree(s.to_string()));
    }
    let mut heights = Vec::with_capacity(s.n() + 1);
    heights.push(0i64);
    for &e in s.exps() {
        let last = *heights.last().unwrap();
        heights.push(last + 1 - e as i64);
    }
    Ok(LatticePath {
        heights,
        m: m.clone(),
    })
}

pub fn path_to_monomial(p: &LatticePath) -> Result<Monomial> {
    p.to_monomial()
}

/// `^iP'`: keep `P_0, …, P_{i−1}` and reflect `P_i, …, P_n`. The result may
/// be inadmissible.
pub fn reflect_suffix(p: &LatticePath, r: &RedLine, i: usize) -> Result<LatticePath> {
    let n = p.n();
    if r.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: r.n(),
        });
    }
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let heights = p
        .heights
        .iter()
        .enumerate()
        .map(|(a, &b)| if a < i { b } else { r.reflect_height(a, b) })
        .collect();
    Ok(LatticePath {
        heights,
        m: p.m.clone(),
    })
}

/// The maximal `i` such that `^iP'` is admissible, found by testing only the
/// pivot edge `(P_{i−1}, P_i')`; the reflected edges after it are always
/// admissible.
pub fn criticality(p: &LatticePath, r: &RedLine) -> Option<usize> {
    let h = &p.heights;
    (1..=p.n())
        .rev()
        .find(|&i| slope_admissible(r.reflect_height(i, h[i]) - h[i - 1], p.m.get(i)))
}

/// Same as [`criticality`] but rebuilds and checks every reflected path.
pub fn criticality_exhaustive(p: &LatticePath, r: &RedLine) -> Option<usize> {
    (0..=p.n()).rev().find(|&i| {
        reflect_suffix(p, r, i)
            .map(|q| q.is_admissible())
            .unwrap_or(false)
    })
}

pub fn is_critical(p: &LatticePath, r: &RedLine) -> bool {
    criticality(p, r).is_some()
}

/// A critical path, its reflection index `λ` and its image `Λ(P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reflection {
    pub path: LatticePath,
    pub lambda: usize,
    pub image: LatticePath,
}

/// `Λ(P)`, or `None` for a non-critical path.
pub fn reflect(p: &LatticePath, r: &RedLine) -> Option<Reflection> {
    let lambda = criticality(p, r)?;
    let image = reflect_suffix(p, r, lambda).ok()?;
    Some(Reflection {
        path: p.clone(),
        lambda,
        image,
    })
}

/// `d' = Σ m_i − n − d + k`, the degree paired with `d` by reflection.
pub fn paired_degree(m: &DegreeVector, k: u32, d: u32) -> i64 {
    m.sum() as i64 - m.n() as i64 - d as i64 + k as i64
}

/// Checks that `Λ_d` maps the critical paths of degree `d` onto those of
/// degree `d'`, that every image is critical, and that `Λ_{d'} ∘ Λ_d = id`.
pub fn reflection_bijection_check(n: usize, m: &DegreeVector, k: u32, d: u32) -> Result<bool> {
    let r = build_red_line(n, m, k)?;
    let dp = paired_degree(m, k, d);
    let mut images = Vec::new();
    for s in enumerate_m_free(m, d) {
        let p = monomial_to_path(&s, m)?;
        let Some(refl) = reflect(&p, &r) else { continue };
        if !refl.image.is_admissible() || refl.image.endpoint().1 != n as i64 - dp {
            return Ok(false);
        }
        match reflect(&refl.image, &r) {
            Some(back) if back.image == p => {}
            _ => return Ok(false),
        }
        images.push(refl.image.to_monomial()?);
    }
    images.sort();
    images.dedup();
    let target = if dp < 0 {
        0
    } else {
        enumerate_m_free(m, dp as u32)
            .into_iter()
            .filter(|t| is_critical(&monomial_to_path(t, m).unwrap(), &r))
            .count()
    };
    Ok(images.len() == target)
}

/// Number of critical paths ending at `(n, n − d)`.
pub fn critical_count(m: &DegreeVector, k: u32, d: u32) -> Result<usize> {
    let r = RedLine::new(m, k)?;
    let mut c = 0;
    for s in enumerate_m_free(m, d) {
        if is_critical(&monomial_to_path(&s, m)?, &r) {
            c += 1;
        }
    }
    Ok(c)
}
