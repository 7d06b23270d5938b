use aci_core::closed_form::{coefficients_prime_bounded, reduced_gb_identity};
use aci_core::oracle::{initial_ideal_oracle, multiplication_rank, OracleConfig};
use aci_core::wlp::{gb_mod_p_check, wlp_decide, Route};
use aci_core::{DegreeVector, OrderKind, PrimeField, Rationals, TermOrder};

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn grid() -> Vec<DegreeVector> {
    let mut out = Vec::new();
    for n in 2..=4usize {
        for m in 2..=4u32 {
            out.push(DegreeVector::equigenerated(m, n).unwrap());
        }
    }
    for v in [vec![2, 3, 4], vec![2, 2, 3, 3], vec![3, 2, 4, 2], vec![2, 2, 2, 4]] {
        out.push(DegreeVector::new(v).unwrap());
    }
    out
}

#[test]
fn mod_p_check_implies_equal_initial_ideals() {
    for m in grid() {
        let order = TermOrder::grevlex(m.n());
        let q = initial_ideal_oracle(&m, 1, &OracleConfig::new(order.clone(), Rationals)).unwrap();
        for p in PRIMES {
            if gb_mod_p_check(&m, 1, p).unwrap() {
                let f = PrimeField::new(p).unwrap();
                let fp = initial_ideal_oracle(&m, 1, &OracleConfig::new(order.clone(), f)).unwrap();
                assert_eq!(q, fp, "m={:?} p={p}", m.as_slice());
            }
        }
    }
}

#[test]
fn rational_coefficients_have_small_primes() {
    for m in grid() {
        for k in 1..=4 {
            let gb = reduced_gb_identity(&m, k, OrderKind::GradedRevLex).unwrap();
            assert!(coefficients_prime_bounded(&gb, m.max() as u64), "m={:?} k={k}", m.as_slice());
        }
    }
}

#[test]
fn large_prime_gives_maximal_rank_everywhere() {
    for m in grid() {
        for d in 0..m.socle(m.n()) {
            let r = multiplication_rank(&m, 32003, d, 1).unwrap();
            assert!(r.is_maximal(), "m={:?} d={d}", m.as_slice());
        }
    }
}

#[test]
fn strong_lefschetz_powers_have_maximal_rank() {
    let m = DegreeVector::new(vec![2, 3, 4]).unwrap();
    let top = m.socle(3);
    for d in 0..=top {
        for e in 1..=top - d {
            assert!(multiplication_rank(&m, 10007, d, e).unwrap().is_maximal(), "d={d} e={e}");
        }
    }
}

#[test]
fn routes_agree_for_equigenerated_n5() {
    for m in 2..=3 {
        let dv = DegreeVector::equigenerated(m, 5).unwrap();
        for p in PRIMES {
            let v = wlp_decide(&dv, p, &Route::ALL).unwrap();
            assert!(v.outcomes.iter().all(|o| o.verdict == v.has_wlp), "m={m} p={p}");
        }
    }
}

#[test]
fn non_prime_is_rejected() {
    let m = DegreeVector::equigenerated(2, 3).unwrap();
    assert!(wlp_decide(&m, 4, &[Route::Rank]).is_err());
    assert!(multiplication_rank(&m, 1, 0, 1).is_err());
}
