use std::collections::HashMap;

use crate::algebra::{is_prime, DegreeVector, Monomial};
use crate::error::{Error, Result};
use crate::initial::enumerate_m_free;

/// Rank of `×ℓ^e : (R/P)_d → (R/P)_{d+e}` together with the two dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct MapRank {
    pub rank: usize,
    pub source_dim: usize,
    pub target_dim: usize,
}

impl MapRank {
    pub fn is_maximal(&self) -> bool {
        self.rank == self.source_dim.min(self.target_dim)
    }
}

/// Rank over `F_p` of multiplication by `(x_1 + ⋯ + x_n)^e` on the monomial
/// complete intersection `R/(x_i^{m_i})`, in the `m`-free monomial basis.
pub fn multiplication_rank(m: &DegreeVector, p: u64, d: u32, e: u32) -> Result<MapRank> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let source = enumerate_m_free(m, d);
    let target = enumerate_m_free(m, d + e);
    let index: HashMap<&Monomial, usize> = target.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let n = m.n();
    let rows: Vec<Vec<u64>> = source
        .iter()
        .map(|s| {
            let mut cur: HashMap<Monomial, u64> = HashMap::from([(s.clone(), 1)]);
            for _ in 0..e {
                let mut next: HashMap<Monomial, u64> = HashMap::new();
                for (mono, c) in &cur {
                    for i in 0..n {
                        if mono.exp(i) + 1 < m.as_slice()[i] {
                            let t = mono.mul(&Monomial::var_power(n, i, 1));
                            let slot = next.entry(t).or_insert(0);
                            *slot = (*slot + c) % p;
                        }
                    }
                }
                next.retain(|_, c| *c != 0);
                cur = next;
            }
            let mut row = vec![0u64; target.len()];
            for (mono, c) in cur {
                row[index[&mono]] = c;
            }
            row
        })
        .collect();
    Ok(MapRank {
        rank: rank_mod_p(rows, p),
        source_dim: source.len(),
        target_dim: target.len(),
    })
}

/// Row-echelon rank of a dense matrix over `F_p`.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    for row in rows.iter_mut() {
        for x in row.iter_mut() {
            *x %= p;
        }
    }
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}
