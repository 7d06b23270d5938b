//! The weak Lefschetz property of `R/(x_1^{m_1}, …, x_n^{m_n})` in characteristic `p`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{is_prime, DegreeVector, Monomial, PrimeField, QPoly, TermOrder};
use crate::closed_form::{build_certificate, build_gs_divisor_form, clear_denominators};
use crate::error::{Error, Result};
use crate::initial::{crit_sets, minimal_generators};
use crate::oracle::{initial_ideal_oracle, multiplication_rank, OracleConfig};

/// `⌊(n(m − 1) + 1)/2⌋`; for `n ≥ 5` the WLP holds iff `p` exceeds it.
pub fn wlp_threshold_equigenerated(n: usize, m: u32) -> Result<u32> {
    if n < 5 {
        return Err(Error::Precondition(format!("threshold formula needs n >= 5, got {n}")));
    }
    if m < 2 {
        return Err(Error::InvalidParameters(format!("m must be at least 2, got {m}")));
    }
    Ok((n as u32 * (m - 1)).div_ceil(2))
}

/// For every basis element, the least positive integer `c` such that `c·g_s`
/// and its cofactor `c·f_s` in `g_s = f_s·ℓ^k + Σ a_i·x_i^{m_i}` are both
/// integral. Pure powers get `c = 1`. Since `g_s` is monic, `c` is also the
/// leading coefficient of the integral element.
pub fn cleared_leading_coefficients(m: &DegreeVector, k: u32) -> Result<Vec<(Monomial, BigInt)>> {
    let crit = crit_sets(m.n(), m, k)?;
    let mut out: Vec<(Monomial, BigInt)> = crit.pure_powers.iter().map(|p| (p.clone(), BigInt::one())).collect();
    for s in crit.all() {
        let cert = build_certificate(s, m, k)?;
        let g = build_gs_divisor_form(s, s.max_index(), m, k)?;
        let c = cert
            .f_s
            .terms()
            .chain(g.terms())
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        out.push((s.clone(), c));
    }
    Ok(out)
}

/// True iff no leading coefficient of the integral basis is divisible by `p`.
/// Then every element reduces to an element of the ideal over `F_p` with the
/// same leading monomial, so the initial ideals over `F_p` and `Q` agree.
pub fn gb_mod_p_check(m: &DegreeVector, k: u32, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p = BigInt::from(p);
    Ok(cleared_leading_coefficients(m, k)?
        .iter()
        .all(|(_, c)| !c.mod_floor(&p).is_zero()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Threshold,
    Rank,
    #[serde(rename = "initideal")]
    InitialIdeal,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Threshold, Route::Rank, Route::InitialIdeal];
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Threshold => "threshold",
            Route::Rank => "rank",
            Route::InitialIdeal => "initideal",
        })
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "threshold" => Ok(Route::Threshold),
            "rank" => Ok(Route::Rank),
            "initideal" | "initial-ideal" => Ok(Route::InitialIdeal),
            other => Err(Error::Parse(format!("unknown route {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `×ℓ : A_d → A_{d+1}` has rank below `expected`.
    Rank { degree: u32, rank: usize, expected: usize },
    /// The threshold `⌊(n(m−1)+1)/2⌋` is at least `p`.
    Threshold { threshold: u32 },
    /// A minimal generator of one initial ideal that the other lacks.
    LeadingMonomial { monomial: String, only_in: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RouteOutcome {
    pub route: Route,
    pub verdict: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WlpVerdict {
    pub n: usize,
    pub m: Vec<u32>,
    pub p: u64,
    pub has_wlp: bool,
    pub outcomes: Vec<RouteOutcome>,
    /// Set when the initial ideals differ although the WLP holds. Only possible
    /// outside equigenerated `n >= 5`.
    pub initial_ideal_diverges: bool,
}

fn threshold_route(m: &DegreeVector, p: u64) -> Result<RouteOutcome> {
    let mm = m.as_slice()[0];
    if m.as_slice().iter().any(|&x| x != mm) {
        return Err(Error::Precondition("threshold route needs equigenerated m".into()));
    }
    let t = wlp_threshold_equigenerated(m.n(), mm)?;
    let verdict = p > t as u64;
    Ok(RouteOutcome {
        route: Route::Threshold,
        verdict,
        witness: (!verdict).then_some(Witness::Threshold { threshold: t }),
    })
}

fn rank_route(m: &DegreeVector, p: u64) -> Result<RouteOutcome> {
    for d in 0..m.socle(m.n()) {
        let r = multiplication_rank(m, p, d, 1)?;
        if !r.is_maximal() {
            return Ok(RouteOutcome {
                route: Route::Rank,
                verdict: false,
                witness: Some(Witness::Rank {
                    degree: d,
                    rank: r.rank,
                    expected: r.source_dim.min(r.target_dim),
                }),
            });
        }
    }
    Ok(RouteOutcome {
        route: Route::Rank,
        verdict: true,
        witness: None,
    })
}

fn initial_ideal_route(m: &DegreeVector, p: u64) -> Result<RouteOutcome> {
    let n = m.n();
    let cfg = OracleConfig::new(TermOrder::grevlex(n), PrimeField::new(p)?);
    let fp = initial_ideal_oracle(m, 1, &cfg)?;
    let q = minimal_generators(n, m, 1)?;
    let extra_fp = fp.min_gens().iter().find(|g| !q.min_gens().contains(g));
    let extra_q = q.min_gens().iter().find(|g| !fp.min_gens().contains(g));
    let witness = match (extra_fp, extra_q) {
        (Some(g), _) => Some(Witness::LeadingMonomial {
            monomial: g.to_string(),
            only_in: format!("F_{p}"),
        }),
        (None, Some(g)) => Some(Witness::LeadingMonomial {
            monomial: g.to_string(),
            only_in: "Q".into(),
        }),
        (None, None) => None,
    };
    Ok(RouteOutcome {
        route: Route::InitialIdeal,
        verdict: witness.is_none(),
        witness,
    })
}

/// Run the selected routes and reconcile them. The threshold and
/// initial-ideal routes must agree with the rank route for equigenerated
/// `m` with `n ≥ 5`; elsewhere a differing initial ideal is reported.
pub fn wlp_decide(m: &DegreeVector, p: u64, routes: &[Route]) -> Result<WlpVerdict> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if routes.is_empty() {
        return Err(Error::InvalidParameters("no routes selected".into()));
    }
    let mut outcomes = Vec::new();
    for r in routes {
        outcomes.push(match r {
            Route::Threshold => threshold_route(m, p)?,
            Route::Rank => rank_route(m, p)?,
            Route::InitialIdeal => initial_ideal_route(m, p)?,
        });
    }
    let find = |r: Route| outcomes.iter().find(|o| o.route == r).map(|o| o.verdict);
    let lefschetz = find(Route::Rank).or(find(Route::Threshold));
    let equi = m.as_slice().iter().all(|&x| x == m.as_slice()[0]);
    let theorem_applies = equi && m.n() >= 5;
    if let (Some(a), Some(b)) = (find(Route::Rank), find(Route::Threshold)) {
        if a != b {
            return Err(Error::Inconsistent(format!(
                "rank route says {a}, threshold says {b} for p={p}"
            )));
        }
    }
    let mut initial_ideal_diverges = false;
    if let (Some(w), Some(ii)) = (lefschetz, find(Route::InitialIdeal)) {
        if w != ii {
            if theorem_applies {
                return Err(Error::Inconsistent(format!(
                    "WLP verdict {w} but initial-ideal verdict {ii} for p={p}"
                )));
            }
            initial_ideal_diverges = w && !ii;
        }
    }
    let has_wlp = lefschetz.or(find(Route::InitialIdeal)).unwrap();
    Ok(WlpVerdict {
        n: m.n(),
        m: m.as_slice().to_vec(),
        p,
        has_wlp,
        outcomes,
        initial_ideal_diverges,
    })
}

/// What the mixed-degree family `m_a = (2, 2, 2, 1+3a, 2+3a)` over `F_3` shows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub a: u32,
    pub m: Vec<u32>,
    /// `g_s` for `s = x3·x4²`, content-normalized over `Z`.
    pub cleared_gs: String,
    /// Whether it equals `3x3(x4+x5)² + (x4+x5)³`.
    pub matches_expected: bool,
    pub leading_coefficient: String,
    pub gb_mod_p_check: bool,
    pub has_wlp: bool,
    pub initial_ideals_equal: bool,
    /// Minimal generators over `F_3` that are not generators over `Q`.
    pub new_leading_monomials: Vec<String>,
    pub x4_cubed_leading_over_f3: bool,
}

/// Evaluate the family at `a ≥ 1`.
pub fn mixed_degree_counterexample(a: u32) -> Result<CounterexampleReport> {
    if a == 0 {
        return Err(Error::InvalidParameters("the family needs a >= 1".into()));
    }
    let p = 3;
    let m = DegreeVector::new(vec![2, 2, 2, 1 + 3 * a, 2 + 3 * a])?;
    let order = TermOrder::grevlex(5);
    let s = Monomial::parse(5, "x3*x4^2")?;
    let gs = build_gs_divisor_form(&s, 4, &m, 1)?;
    let ints = clear_denominators(&gs, &order)?;
    let cleared = QPoly::from_terms(
        crate::algebra::Rationals,
        5,
        ints.iter().map(|(mono, c)| (mono.clone(), crate::algebra::Rational::from_integer(c.clone()))),
    );
    let l = QPoly::parse(5, "x4+x5")?;
    let expected = QPoly::parse(5, "3*x3")?.mul(&l.pow(2)).add(&l.pow(3));
    let fp = initial_ideal_oracle(&m, 1, &OracleConfig::new(order.clone(), PrimeField::new(p)?))?;
    let q = minimal_generators(5, &m, 1)?;
    let new: Vec<String> = fp
        .min_gens()
        .iter()
        .filter(|g| !q.min_gens().contains(g))
        .map(|g| g.to_string())
        .collect();
    let x4c = Monomial::parse(5, "x4^3")?;
    Ok(CounterexampleReport {
        a,
        m: m.as_slice().to_vec(),
        cleared_gs: cleared.render(&order),
        matches_expected: cleared == expected,
        leading_coefficient: ints[0].1.to_string(),
        gb_mod_p_check: gb_mod_p_check(&m, 1, p)?,
        has_wlp: rank_route(&m, p)?.verdict,
        initial_ideals_equal: fp == q,
        new_leading_monomials: new,
        x4_cubed_leading_over_f3: fp.min_gens().contains(&x4c) && !q.contains(&x4c),
    })
}
