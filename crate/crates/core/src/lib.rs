//! Gröbner bases of the almost complete intersections
//! `I_{n,m,k} = (x_1^{m_1}, …, x_n^{m_n}, (x_1 + ⋯ + x_n)^k)`.
//!
//! The crate computes initial ideals and reduced Gröbner bases of this family
//! directly from closed formulas driven by lattice-path combinatorics, and
//! cross-checks every result against an independent Buchberger engine.
//! On top of that it derives the enumerative consequences (Catalan, Motzkin,
//! Riordan and s-Catalan counts) and the Lefschetz-property tests in
//! characteristic `p`.
//!
//! Module map:
//!
//! * [`algebra`]: monomials, term orders, coefficient fields, sparse polynomials.
//! * [`paths`]: admissible lattice paths, the red line and the reflection map.
//! * [`initial`]: critical monomials and the minimal generators of the initial ideal.
//! * [`closed_form`]: the reduced Gröbner basis from closed coefficient formulas.
//! * [`hilbert`]: Hilbert series, Lefschetz truncation and socle degrees.
//! * [`oracle`]: Buchberger's algorithm over `Q` and `F_p`, and multiplication-map ranks.
//! * [`sequences`]: degree sequences of the basis and the classical number families.
//! * [`wlp`]: the weak Lefschetz property in positive characteristic.
//! * [`render`]: ASCII and SVG pictures of lattice paths.

pub mod algebra;
pub mod basis;
pub mod closed_form;
pub mod combinat;
pub mod error;
pub mod hilbert;
pub mod initial;
pub mod json;
pub mod oracle;
pub mod paths;
pub mod render;
pub mod sequences;
pub mod wlp;

pub use algebra::{
    DegreeVector, Field, Monomial, OrderKind, PrimeField, Rationals, SparsePoly, TermOrder,
};
pub use error::{Error, Result};
