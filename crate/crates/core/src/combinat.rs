//! Exact factorials, binomials and small helpers over big integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k < 0` or `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `u64` binomial for counting; panics on overflow.
pub fn binomial_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(r).expect("binomial overflows u64")
}

/// Multinomial coefficient `(Σ a_i)! / Π a_i!`.
pub fn multinomial(parts: &[u32]) -> BigInt {
    let mut total = 0i64;
    let mut r = BigInt::one();
    for &a in parts {
        total += a as i64;
        r *= binomial(total, a as i64);
    }
    r
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Truncated product of two integer series.
pub fn series_mul(a: &[i128], b: &[i128], len: usize) -> Vec<i128> {
    let mut r = vec![0i128; len];
    for (i, x) in a.iter().enumerate().take(len) {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            r[i + j] += x * y;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(multinomial(&[2, 1, 1]), BigInt::from(12));
        assert_eq!(binomial_u64(40, 20), 137846528820);
    }

    #[test]
    fn permutation_count() {
        let p = permutations(4);
        assert_eq!(p.len(), 24);
        assert_eq!(p[0], vec![0, 1, 2, 3]);
        assert_eq!(p[23], vec![3, 2, 1, 0]);
        assert_eq!(permutations(0).len(), 1);
    }

    #[test]
    fn series_product() {
        assert_eq!(series_mul(&[1, 1], &[1, 1], 3), vec![1, 2, 1]);
    }
}
