//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use aci_core::closed_form::{
    build_gs_divisor_form, build_gs_tail_form, coefficients_prime_bounded, counting_identity, distinct_gb_census,
    reduced_gb, reduced_gb_identity,
};
use aci_core::combinat::factorial;
use aci_core::hilbert::{hs_complete_intersection, truncate_lefschetz};
use aci_core::initial::{crit_sets, hs_quotient, minimal_generators};
use aci_core::oracle::{aci_generators, buchberger, OracleConfig};
use aci_core::paths::reflection_bijection_check;
use aci_core::sequences::{
    catalan_convolution_check_m2, convolution_check, g3k, g3k_by_enumeration, max_gb_degree, motzkin_row,
    riordan_row, s_catalan_triangle,
};
use aci_core::wlp::{mixed_degree_counterexample, wlp_decide, wlp_threshold_equigenerated, Route};
use aci_core::{DegreeVector, Monomial, OrderKind, Rationals, SparsePoly, TermOrder};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(t: Instant, limit: Duration) -> Result<(), String> {
    ensure(t.elapsed() < limit, format!("took {:?}, limit {:?}", t.elapsed(), limit))
}

fn dv(v: &[u32]) -> DegreeVector {
    DegreeVector::new(v.to_vec()).unwrap()
}

fn mono(n: usize, s: &str) -> Monomial {
    Monomial::parse(n, s).unwrap()
}

/// Every `m` with `n ≤ n_max` entries drawn from `values`.
fn m_grid(n_max: usize, values: &[u32]) -> Vec<DegreeVector> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..n_max {
        layer = layer
            .iter()
            .flat_map(|p| values.iter().map(move |&v| [p.as_slice(), &[v]].concat()))
            .collect();
        out.extend(layer.iter().map(|v| dv(v)));
    }
    out
}

fn golden_gb() -> Outcome {
    let t = Instant::now();
    let order = TermOrder::grevlex(4);
    let gb = reduced_gb(&dv(&[3, 2, 2, 3]), 2, &order).map_err(|e| e.to_string())?;
    let golden = [
        "x3^2",
        "x2^2",
        "x4^3",
        "x1^2+2*x1*x2+2*x1*x3+2*x2*x3+2*x1*x4+2*x2*x4+2*x3*x4+x4^2",
        "x1*x2*x3+x1*x2*x4+x1*x3*x4+2*x2*x3*x4+1/2*x1*x4^2+x2*x4^2+x3*x4^2",
        "x2*x3*x4^2",
        "x1*x3*x4^2",
        "x1*x2*x4^2",
    ];
    let ours: BTreeSet<String> = gb.render_lines().into_iter().collect();
    let theirs: BTreeSet<String> = golden
        .iter()
        .map(|s| SparsePoly::parse(4, s).unwrap().render(&order))
        .collect();
    ensure(gb.len() == 8, format!("{} elements", gb.len()))?;
    ensure(ours == theirs, format!("basis differs: {ours:?}"))?;
    within(t, Duration::from_secs(1))?;
    Ok(format!("8 elements identical in {:?}", t.elapsed()))
}

fn golden_crit() -> Outcome {
    let c = crit_sets(4, &dv(&[3, 2, 2, 3]), 2).map_err(|e| e.to_string())?;
    let crit: BTreeSet<Monomial> = c.all().cloned().collect();
    let want: BTreeSet<Monomial> = ["x1^2", "x1*x2*x3", "x2*x3*x4^2", "x1*x3*x4^2", "x1*x2*x4^2"]
        .iter()
        .map(|s| mono(4, s))
        .collect();
    let pure: BTreeSet<Monomial> = c.pure_powers.iter().cloned().collect();
    let want_pure: BTreeSet<Monomial> = ["x2^2", "x3^2", "x4^3"].iter().map(|s| mono(4, s)).collect();
    ensure(crit == want, format!("crit {crit:?}"))?;
    ensure(pure == want_pure, format!("pure powers {pure:?}"))?;
    ensure(!pure.contains(&mono(4, "x1^3")), "x1^3 retained")?;
    Ok("5 critical monomials, pure powers x2^2, x3^2, x4^3".into())
}

fn oracle_equivalence() -> Outcome {
    let t = Instant::now();
    let mut runs = 0;
    for m in m_grid(4, &[2, 3, 4]) {
        for k in 1..=4 {
            for kind in [OrderKind::GradedRevLex, OrderKind::GradedLex] {
                let order = TermOrder::identity(kind, m.n());
                let cf = reduced_gb(&m, k, &order).map_err(|e| e.to_string())?;
                let bb = buchberger(&aci_generators(&m, k, &Rationals), &OracleConfig::new(order, Rationals))
                    .map_err(|e| e.to_string())?;
                ensure(
                    cf.same_as(&bb),
                    format!("m={:?} k={k} {kind:?}", m.as_slice()),
                )?;
                runs += 1;
            }
        }
    }
    within(t, Duration::from_secs(300))?;
    Ok(format!("{runs} instances equal in {:?}", t.elapsed()))
}

fn hilbert_slp() -> Outcome {
    let mut cases = 0;
    for m in m_grid(4, &[2, 3, 4]) {
        for k in 1..=4 {
            let n = m.n();
            let trim = |mut v: Vec<i64>| {
                while v.last() == Some(&0) {
                    v.pop();
                }
                v
            };
            let paths = trim(hs_quotient(n, &m, k).map_err(|e| e.to_string())?.into_iter().map(|x| x as i64).collect());
            let trunc = truncate_lefschetz(&hs_complete_intersection(&m), k).coeffs().to_vec();
            let gb = buchberger(&aci_generators(&m, k, &Rationals), &OracleConfig::new(TermOrder::grevlex(n), Rationals))
                .map_err(|e| e.to_string())?;
            let oracle = trim(gb.initial_ideal().hs_within(&m).into_iter().map(|x| x as i64).collect());
            ensure(
                paths == trunc && trunc == oracle,
                format!("m={:?} k={k}: {paths:?} {trunc:?} {oracle:?}", m.as_slice()),
            )?;
            cases += 1;
        }
    }
    Ok(format!("{cases} Hilbert series agree across three routes"))
}

fn cube_table() -> Outcome {
    let table: [[u128; 9]; 6] = [
        [1, 0, 1, 1, 3, 6, 15, 36, 91],
        [1, 1, 2, 4, 9, 21, 51, 127, 323],
        [1, 1, 3, 6, 15, 36, 91, 232, 603],
        [1, 2, 5, 12, 30, 76, 196, 512, 1353],
        [1, 2, 6, 15, 40, 105, 280, 750, 2025],
        [1, 3, 9, 25, 69, 189, 518, 1422, 3915],
    ];
    for (i, row) in table.iter().enumerate() {
        let k = i as u32 + 1;
        let hf = g3k(k, 8).map_err(|e| e.to_string())?;
        let en = g3k_by_enumeration(k, 8).map_err(|e| e.to_string())?;
        ensure(hf == row, format!("k={k} Hilbert route {hf:?}"))?;
        ensure(en == row, format!("k={k} enumeration {en:?}"))?;
    }
    Ok("54 entries match by both routes".into())
}

fn convolutions() -> Outcome {
    for k in 1..=6 {
        ensure(convolution_check(k, 10).map_err(|e| e.to_string())?, format!("Motzkin/Riordan k={k}"))?;
    }
    for k in 1..=4 {
        ensure(catalan_convolution_check_m2(k, 10).map_err(|e| e.to_string())?, format!("Catalan k={k}"))?;
    }
    let m = motzkin_row(20);
    let r = riordan_row(21);
    ensure((0..=20).all(|n| m[n] == r[n] + r[n + 1]), "M(n) = R(n) + R(n+1)")?;
    Ok("k<=6 to n=10, Catalan k<=4 to n=10, M=R+R' to n=20".into())
}

fn census() -> Outcome {
    let t = Instant::now();
    let c = distinct_gb_census(&dv(&[2, 3, 4]), 2).map_err(|e| e.to_string())?;
    ensure(c == 5, format!("(2,3,4), k=2 gives {c}"))?;
    let mut cases = 0;
    for n in 1..=4usize {
        for m in [3u32, 4] {
            for k in 1..=6u32 {
                let mu = ((k / (m - 1)) as usize).min(n);
                let want = factorial(n as u64) / factorial(mu as u64);
                let got = distinct_gb_census(&DegreeVector::equigenerated(m, n).unwrap(), k).map_err(|e| e.to_string())?;
                ensure(
                    BigInt::from(got) == want,
                    format!("n={n} m={m} k={k}: {got} vs {want}"),
                )?;
                cases += 1;
            }
        }
    }
    within(t, Duration::from_secs(120))?;
    Ok(format!("5 bases for (2,3,4); {cases} equigenerated counts in {:?}", t.elapsed()))
}

fn max_degree_element() -> Outcome {
    let m = dv(&[2, 3, 2, 20, 3]);
    let gb = reduced_gb_identity(&m, 3, OrderKind::GradedRevLex).map_err(|e| e.to_string())?;
    let want = SparsePoly::parse(5, "x4^7+7*x4^6*x5+21*x4^5*x5^2").unwrap();
    ensure(gb.elements().contains(&want), "x4^7 element missing")?;
    let top = gb
        .elements()
        .iter()
        .filter(|g| g.leading_monomial(gb.order()).unwrap().is_m_free(&m))
        .map(|g| g.leading_monomial(gb.order()).unwrap().degree())
        .max()
        .unwrap();
    let formula = max_gb_degree(&m, 3).map_err(|e| e.to_string())?;
    ensure(top == 7 && formula == 7, format!("max degree {top}, formula {formula}"))?;
    Ok("element present; max m-free degree 7 = formula".into())
}

fn wlp_char_p() -> Outcome {
    let mut cases = 0;
    for mm in [2u32, 3] {
        let m = DegreeVector::equigenerated(mm, 5).unwrap();
        let t = wlp_threshold_equigenerated(5, mm).unwrap();
        for p in [2u64, 3, 5, 7, 11, 13] {
            let v = wlp_decide(&m, p, &Route::ALL).map_err(|e| e.to_string())?;
            let verdicts: Vec<bool> = v.outcomes.iter().map(|o| o.verdict).collect();
            ensure(
                verdicts.iter().all(|&b| b == (p > t as u64)),
                format!("m={mm} p={p}: {verdicts:?}"),
            )?;
            cases += 1;
        }
    }
    let r = mixed_degree_counterexample(1).map_err(|e| e.to_string())?;
    ensure(r.matches_expected, format!("g_s = {}", r.cleared_gs))?;
    ensure(r.has_wlp && !r.initial_ideals_equal, "family does not separate WLP from initial ideal")?;
    ensure(r.leading_coefficient == "3" && !r.gb_mod_p_check, "leading coefficient not divisible by 3")?;
    ensure(r.x4_cubed_leading_over_f3, "x4^3 not a leading monomial over F_3")?;
    let m = dv(&[2, 2, 2, 4, 5]);
    let v = wlp_decide(&m, 3, &[Route::Rank, Route::InitialIdeal]).map_err(|e| e.to_string())?;
    ensure(v.has_wlp && v.initial_ideal_diverges, "verdict does not flag the divergence")?;
    Ok(format!("{cases} (m,p) pairs agree on three routes; counterexample reproduced"))
}

fn property_suites() -> Outcome {
    let t = Instant::now();
    let mut refl = 0;
    for m in m_grid(5, &[2, 3, 4]) {
        for k in 1..=4 {
            for d in 0..=m.socle(m.n()) {
                ensure(
                    reflection_bijection_check(m.n(), &m, k, d).map_err(|e| e.to_string())?,
                    format!("reflection m={:?} k={k} d={d}", m.as_slice()),
                )?;
                refl += 1;
            }
        }
    }
    let mut forms = 0;
    for m in m_grid(4, &[2, 3, 4]) {
        for k in 1..=4 {
            let c = crit_sets(m.n(), &m, k).map_err(|e| e.to_string())?;
            for s in c.all() {
                let a = build_gs_divisor_form(s, s.max_index(), &m, k).map_err(|e| e.to_string())?;
                let b = build_gs_tail_form(s, &m, k).map_err(|e| e.to_string())?;
                ensure(a == b, format!("forms differ for {s}, m={:?} k={k}", m.as_slice()))?;
                forms += 1;
            }
            let gb = reduced_gb_identity(&m, k, OrderKind::GradedRevLex).map_err(|e| e.to_string())?;
            ensure(
                coefficients_prime_bounded(&gb, m.max() as u64),
                format!("coefficient prime above max m for m={:?} k={k}", m.as_slice()),
            )?;
            ensure(
                gb.initial_ideal() == minimal_generators(m.n(), &m, k).map_err(|e| e.to_string())?,
                "initial ideal mismatch",
            )?;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=4);
        let p = Monomial::new((0..n).map(|_| rng.gen_range(0..4)).collect());
        let q = Monomial::new((0..n).map(|_| rng.gen_range(0..4)).collect());
        let r = Monomial::new((0..n).map(|i| rng.gen_range(0..=p.exp(i) + q.exp(i))).collect());
        ensure(counting_identity(&p, &q, &r).map_err(|e| e.to_string())?, format!("identity p={p} q={q} r={r}"))?;
    }
    for m in 2..=5 {
        let tri = s_catalan_triangle(m, 6).map_err(|e| e.to_string())?;
        ensure(tri.log_concavity_check(), format!("row not log-concave for s={}", m - 1))?;
    }
    within(t, Duration::from_secs(600))?;
    Ok(format!(
        "{refl} reflection cases, {forms} g_s pairs, 1000 identities, s<=4 triangles in {:?}",
        t.elapsed()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("golden reduced basis", golden_gb),
        ("golden critical set", golden_crit),
        ("oracle equivalence", oracle_equivalence),
        ("Hilbert series and SLP", hilbert_slp),
        ("cube-free degree counts", cube_table),
        ("convolution identities", convolutions),
        ("basis census", census),
        ("maximal-degree element", max_degree_element),
        ("WLP in characteristic p", wlp_char_p),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match res {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{:.2?}]", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{:.2?}]", i + 1, t.elapsed());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
