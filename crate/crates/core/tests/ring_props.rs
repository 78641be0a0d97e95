//! Algebraic laws for the coefficient ring and truncated series.

use flowloop::ring::{qbinom, QLaurent, XSeries};
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec((-8i64..=8, -20i64..=20), 0..6).prop_map(QLaurent::from_terms)
}

fn nonzero_laurent() -> impl Strategy<Value = QLaurent> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn series(order: i64) -> impl Strategy<Value = XSeries> {
    prop::collection::vec((0i64..=order + 4, laurent()), 0..6).prop_map(move |t| XSeries::from_terms(t, order))
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn mirror_is_a_ring_involution(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.mirror().mirror(), a.clone());
        prop_assert_eq!((&a * &b).mirror(), &a.mirror() * &b.mirror());
        prop_assert_eq!(a.mirror().eval_one(), a.eval_one());
    }

    #[test]
    fn series_ring_laws(a in series(10), b in series(10), c in series(10)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn truncation_commutes_with_products(a in series(14), b in series(14), k in 0i64..=14) {
        prop_assert_eq!((&a * &b).truncate(k), &a.truncate(k) * &b.truncate(k));
        prop_assert_eq!((&a + &b).truncate(k), &a.truncate(k) + &b.truncate(k));
    }

    #[test]
    fn reciprocal_of_unit_series(tail in series(12), sign in prop::bool::ANY) {
        let lead = QLaurent::monomial(if sign { 1 } else { -1 }, 3);
        let mut s = XSeries::constant(lead, 12);
        s += &tail.mul_monomial(1, 0, 1);
        let inv = s.recip().unwrap();
        prop_assert!((&s * &inv).is_one());
    }

    #[test]
    fn q_binomial_symmetry(n in 0i64..=9, k in 0i64..=9) {
        prop_assume!(k <= n);
        prop_assert_eq!(qbinom(n, k), qbinom(n, n - k));
        // Palindromic with centre k(n-k)/2 in q.
        let b = qbinom(n, k);
        prop_assert_eq!(b.mirror().shift(2 * k * (n - k)), b);
    }
}

#[test]
fn mixed_order_arithmetic_keeps_the_smaller_order() {
    let a = XSeries::one(6);
    let b = XSeries::one(10);
    assert_eq!((&a + &b).order(), 6);
    assert_eq!((&a * &b).order(), 6);
    assert_eq!(a.to_string(), "1 + O(x^4)");
}
