use std::cmp::Ordering;

use aci_core::{Monomial, OrderKind, Rationals, SparsePoly, TermOrder};
use num_rational::BigRational;
use proptest::prelude::*;

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..5, n).prop_map(Monomial::new)
}

fn ranking(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn kind() -> impl Strategy<Value = OrderKind> {
    prop_oneof![Just(OrderKind::GradedRevLex), Just(OrderKind::GradedLex)]
}

fn poly(n: usize) -> impl Strategy<Value = SparsePoly<Rationals>> {
    proptest::collection::vec((monomial(n), -5i64..=5, 1i64..4), 0..6).prop_map(move |terms| {
        SparsePoly::from_terms(
            Rationals,
            n,
            terms
                .into_iter()
                .map(|(m, a, b)| (m, BigRational::new(a.into(), b.into()))),
        )
    })
}

proptest! {
    #[test]
    fn divisibility_matches_quotient(a in monomial(4), b in monomial(4)) {
        let ab = a.mul(&b);
        prop_assert!(a.divides(&ab));
        prop_assert_eq!(ab.div(&a), Some(b.clone()));
        prop_assert_eq!(a.gcd(&b).mul(&a.lcm(&b)), ab);
        prop_assert_eq!(a.divides(&b), b.div(&a).is_some());
    }

    #[test]
    fn order_is_graded_total_and_multiplicative(
        (r, k, a, b, c) in (ranking(4), kind(), monomial(4), monomial(4), monomial(4))
    ) {
        let o = TermOrder::new(k, r).unwrap();
        let ab = o.cmp(&a, &b);
        prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        if a.degree() != b.degree() {
            prop_assert_eq!(ab, a.degree().cmp(&b.degree()));
        }
        prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
        prop_assert_eq!(o.key(&a).cmp(&o.key(&b)), ab);
    }

    #[test]
    fn render_parse_round_trip(p in poly(3), r in ranking(3), k in kind()) {
        let o = TermOrder::new(k, r).unwrap();
        let back = SparsePoly::parse(3, &p.render(&o)).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn ring_laws(p in poly(3), q in poly(3), s in poly(3)) {
        prop_assert_eq!(p.add(&q), q.add(&p));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q.add(&s)), p.mul(&q).add(&p.mul(&s)));
        prop_assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn reduction_leaves_no_divisible_term(p in poly(3), q in poly(3), r in ranking(3)) {
        let o = TermOrder::new(OrderKind::GradedRevLex, r).unwrap();
        let basis: Vec<_> = [q].into_iter().filter(|g| !g.is_zero()).collect();
        let red = p.reduce(&basis, &o).unwrap();
        for g in &basis {
            let lm = g.leading_monomial(&o).unwrap();
            prop_assert!(red.support().all(|t| !lm.divides(t)));
        }
    }
}
