use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational numbers.
pub type Rational = BigRational;

/// A coefficient field. Elements are plain values; the field object carries
/// any parameters (the characteristic for prime fields).
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `a` must be nonzero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn from_bigint(&self, a: &BigInt) -> Self::Elem;
    /// Image of a rational number; fails when the denominator is not invertible.
    fn from_rational(&self, a: &Rational) -> Result<Self::Elem>;
    /// Canonical `num/den` rendering.
    fn render(&self, a: &Self::Elem) -> String;
    /// Lift to a rational (the least non-negative residue for prime fields).
    fn to_rational(&self, a: &Self::Elem) -> Rational;

    fn from_i64(&self, a: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(a))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn inv(&self, a: &Rational) -> Rational {
        a.recip()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn from_bigint(&self, a: &BigInt) -> Rational {
        Rational::from_integer(a.clone())
    }
    fn from_rational(&self, a: &Rational) -> Result<Rational> {
        Ok(a.clone())
    }
    fn render(&self, a: &Rational) -> String {
        render_rational(a)
    }
    fn to_rational(&self, a: &Rational) -> Rational {
        a.clone()
    }
}

/// `num/den` with a positive denominator, always including the denominator.
pub fn render_rational(a: &Rational) -> String {
    format!("{}/{}", a.numer(), a.denom())
}

/// Parse `a`, `-a`, `a/b`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<BigInt>().map_err(|_| bad())?,
            d.trim().parse::<BigInt>().map_err(|_| bad())?,
        ),
        None => (s.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// The prime field `F_p`, elements stored as least non-negative residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Characteristics up to `2^31` keep products inside `u64`.
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % self.p;
            }
            a = a * a % self.p;
            e >>= 1;
        }
        r
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in F_{}", self.p);
        self.pow(*a, self.p - 2)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_bigint(&self, a: &BigInt) -> u64 {
        let r = a.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits in u64")
    }
    fn from_rational(&self, a: &Rational) -> Result<u64> {
        let den = self.from_bigint(a.denom());
        if den == 0 {
            return Err(Error::Precondition(format!(
                "denominator of {} vanishes mod {}",
                render_rational(a),
                self.p
            )));
        }
        Ok(self.div(&self.from_bigint(a.numer()), &den))
    }
    fn render(&self, a: &u64) -> String {
        format!("{a}/1")
    }
    fn to_rational(&self, a: &u64) -> Rational {
        Rational::from_integer(BigInt::from(*a))
    }
}

/// `true` iff every prime factor of `|a|` is at most `bound`.
pub fn primes_bounded_by(a: &BigInt, bound: u64) -> bool {
    let mut x = a.abs();
    if x.is_zero() {
        return true;
    }
    let mut d = 2u64;
    while d <= bound {
        let bd = BigInt::from(d);
        while (&x % &bd).is_zero() {
            x /= &bd;
        }
        d += 1;
    }
    x.is_one()
}
