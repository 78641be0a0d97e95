//! Gaussian binomials, trinomials and q-Pochhammer symbols.

use super::laurent::QLaurent;
use super::series::XSeries;

/// `1 - q^k`.
fn one_minus_q(k: i64) -> QLaurent {
    QLaurent::from_terms([(0, 1), (2 * k, -1)])
}

/// Generalized Gaussian binomial `[n; k]_q`, defined for every integer `n`
/// by `prod_{j=1..k} (1 - q^{n-k+j}) / (1 - q^j)` and as zero for `k < 0`.
pub fn qbinom(n: i64, k: i64) -> QLaurent {
    if k < 0 {
        return QLaurent::zero();
    }
    if (0..k).contains(&n) {
        // one numerator factor is 1 - q^0
        return QLaurent::zero();
    }
    let mut num = QLaurent::one();
    let mut den = QLaurent::one();
    for j in 1..=k {
        num *= &one_minus_q(n - k + j);
        den *= &one_minus_q(j);
    }
    num.div_exact(&den)
        .expect("Gaussian binomial quotient is a Laurent polynomial")
}

/// `[N; k1, k2, k3]_q = [k1+k2; k2]_q [N; k3]_q`, zero unless the parts are
/// nonnegative and sum to `N`.
pub fn qtrinom(n: i64, k1: i64, k2: i64, k3: i64) -> QLaurent {
    if k1 < 0 || k2 < 0 || k3 < 0 || k1 + k2 + k3 != n {
        return QLaurent::zero();
    }
    &qbinom(k1 + k2, k2) * &qbinom(n, k3)
}

/// Memo table for `[n; k]_q` with `0 <= k <= n <= max`, filled by q-Pascal.
#[derive(Debug, Clone)]
pub struct QBinomTable {
    rows: Vec<Vec<QLaurent>>,
}

impl QBinomTable {
    pub fn new(max: usize) -> Self {
        let mut rows: Vec<Vec<QLaurent>> = Vec::with_capacity(max + 1);
        for n in 0..=max {
            let mut row = Vec::with_capacity(n + 1);
            for k in 0..=n {
                if k == 0 || k == n {
                    row.push(QLaurent::one());
                } else {
                    let prev = &rows[n - 1];
                    row.push(&prev[k - 1] + &prev[k].shift(2 * k as i64));
                }
            }
            rows.push(row);
        }
        Self { rows }
    }

    pub fn max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `[n; k]_q` for `n >= 0`. Out-of-table requests fall back to the
    /// product formula.
    pub fn get(&self, n: i64, k: i64) -> QLaurent {
        if k < 0 || n < 0 || k > n {
            return qbinom(n, k);
        }
        match self.rows.get(n as usize) {
            Some(row) => row[k as usize].clone(),
            None => qbinom(n, k),
        }
    }

    /// `[a+b+c; a, b, c]_q` for nonnegative parts.
    pub fn multinom3(&self, a: i64, b: i64, c: i64) -> QLaurent {
        &self.get(a + b, b) * &self.get(a + b + c, c)
    }
}

/// `(y; q)_k = prod_{l<k} (1 - y q^l)` for the monomial
/// `y = q^(q_half/2) x^(x_half/2)`, as an exact series.
pub fn pochhammer(q_half: i64, x_half: i64, k: usize) -> XSeries {
    let mut acc = XSeries::exact([(0, QLaurent::one())]);
    for l in 0..k as i64 {
        let factor = XSeries::exact([
            (0, QLaurent::one()),
            (x_half, QLaurent::monomial(-1, q_half + 2 * l)),
        ]);
        acc = &acc * &factor;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(terms: &[(i64, i64)]) -> QLaurent {
        QLaurent::from_terms(terms.iter().copied())
    }

    /// Classical `C(n, k)` for any integer `n`, `k >= 0`.
    fn classical(n: i64, k: i64) -> BigInt {
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for j in 0..k {
            num *= n - j;
            den *= j + 1;
        }
        num / den
    }

    #[test]
    fn small_values() {
        assert_eq!(qbinom(2, 1), p(&[(0, 1), (2, 1)]));
        assert_eq!(qbinom(-1, 2), p(&[(-6, 1)]));
        for n in -5..5 {
            assert!(qbinom(n, 0).is_one());
        }
        assert!(qbinom(3, -1).is_zero());
        assert!(qbinom(2, 3).is_zero());
    }

    #[test]
    fn trinomials() {
        assert_eq!(qtrinom(2, 1, 1, 0), p(&[(0, 1), (2, 1)]));
        assert_eq!(qtrinom(3, 1, 1, 1), &p(&[(0, 1), (2, 1)]) * &p(&[(0, 1), (2, 1), (4, 1)]));
        assert!(qtrinom(2, 1, 1, 1).is_zero());
        assert!(qtrinom(1, 2, -1, 0).is_zero());
    }

    #[test]
    fn q_pascal_for_generalized_binomials() {
        for n in -6..=6 {
            for k in 0..=6 {
                let rhs = &qbinom(n - 1, k - 1) + &qbinom(n - 1, k).shift(2 * k);
                assert_eq!(qbinom(n, k), rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn classical_limit() {
        for n in -6..=6 {
            for k in 0..=6 {
                assert_eq!(qbinom(n, k).eval_one(), classical(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn table_matches_product_formula() {
        let t = QBinomTable::new(9);
        for n in 0..=9 {
            for k in 0..=n {
                assert_eq!(t.get(n, k), qbinom(n, k));
            }
        }
        assert_eq!(t.get(12, 5), qbinom(12, 5));
    }

    #[test]
    fn pochhammer_small() {
        // (q x^-1; q)_2 = (1 - q x^-1)(1 - q^2 x^-1)
        let s = pochhammer(2, -2, 2);
        let expect = XSeries::exact([
            (0, QLaurent::one()),
            (-2, p(&[(2, -1), (4, -1)])),
            (-4, p(&[(6, 1)])),
        ]);
        assert_eq!(s, expect);
        assert!(pochhammer(5, 3, 0).is_one());
    }
}
