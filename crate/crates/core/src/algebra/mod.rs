//! Monomials, term orders, coefficient fields and sparse polynomials.

mod field;
mod monomial;
mod order;
mod poly;

pub use field::{is_prime, parse_rational, primes_bounded_by, render_rational, Field, PrimeField, Rational, Rationals};
pub use monomial::{DegreeVector, Monomial};
pub use order::{OrderKind, TermOrder};
pub use poly::{QPoly, SparsePoly};
