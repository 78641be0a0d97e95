//! The two local bifurcation identities for flow-loop weights, as series
//! computations.

use super::laurent::QLaurent;
use super::series::XSeries;
use super::Framing;

/// `sum_{n>=0, e in {0,1}} q^{f (n+e)^2} x^n (-x)^e`. Equals `1`.
pub fn saddle_node_identity(f: Framing, order: i64) -> XSeries {
    let mut out = XSeries::zero(order);
    let mut n = 0i64;
    while 2 * n <= order {
        for e in 0..=1i64 {
            let k = n + e;
            let sign = if e == 1 { -1 } else { 1 };
            out.add_term_owned(2 * k, QLaurent::monomial(sign, f.half_units() * k * k));
        }
        n += 1;
    }
    out
}

/// The pair `(sum q^{f n^2} (-x)^n, sum q^{f(2n+e)^2} x^{2n} (-x)^e)`. The
/// two entries are equal.
pub fn period_doubling_identity(f: Framing, order: i64) -> (XSeries, XSeries) {
    let mut lhs = XSeries::zero(order);
    let mut rhs = XSeries::zero(order);
    let mut n = 0i64;
    while 2 * n <= order {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        lhs.add_term_owned(2 * n, QLaurent::monomial(sign, f.half_units() * n * n));
        for e in 0..=1i64 {
            let k = 2 * n + e;
            let sign = if e == 1 { -1 } else { 1 };
            rhs.add_term_owned(2 * k, QLaurent::monomial(sign, f.half_units() * k * k));
        }
        n += 1;
    }
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn saddle_node_collapses_to_one() {
        assert!(saddle_node_identity(Framing::from_half_units(2), 20).is_one());
        assert!(saddle_node_identity(Framing::from_half_units(0), 20).is_one());
        assert!(saddle_node_identity(Framing::from_half_units(1), 12).is_one());
    }

    #[test]
    fn period_doubling_leading_terms() {
        let (lhs, rhs) = period_doubling_identity(Framing::from_half_units(2), 16);
        assert_eq!(lhs, rhs);
        let head = XSeries::from_terms(
            [
                (0, QLaurent::one()),
                (2, QLaurent::monomial(-1, 2)),
                (4, QLaurent::monomial(1, 8)),
                (6, QLaurent::monomial(-1, 18)),
            ],
            6,
        );
        assert_eq!(lhs.truncate(6), head);
    }
}
