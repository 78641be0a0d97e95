//! Classical Alexander polynomial by two independent routes.
//!
//! Polynomials in `x` are carried as [`QLaurent`] values whose variable is
//! read as `x` (exponents still in half-units).

use super::BraidWord;
use crate::error::{Error, Result};
use crate::lawrence::{rep_matrix, Convention};
use crate::matrix::det_laurent;
use crate::ring::{QLaurent, XSeries, UNBOUNDED};

type Dense = Vec<Vec<QLaurent>>;

/// Normalized Alexander polynomial and the series `(1-x)/Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alexander {
    /// `Δ` with lowest term `+1` at `x^0`, as an exact series in `x`.
    pub delta: XSeries,
    /// `(1 - x)/Δ`, truncated.
    pub inv_delta: XSeries,
}

fn t_pow(k: i64) -> QLaurent {
    QLaurent::monomial(1, 2 * k)
}

fn identity(d: usize) -> Dense {
    (0..d)
        .map(|i| (0..d).map(|j| if i == j { QLaurent::one() } else { QLaurent::zero() }).collect())
        .collect()
}

fn mat_mul(a: &Dense, b: &Dense) -> Dense {
    let d = a.len();
    let mut out = vec![vec![QLaurent::zero(); d]; d];
    for i in 0..d {
        for k in 0..d {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..d {
                if !b[k][j].is_zero() {
                    out[i][j] += &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

fn one_minus(m: &Dense) -> Dense {
    let mut out = identity(m.len());
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            out[i][j] -= v;
        }
    }
    out
}

/// Reduced Burau matrix of `σ_i^{±1}` on `n` strands, `t = x`.
pub(crate) fn burau_generator(n: usize, i: usize, positive: bool) -> Dense {
    let d = n - 1;
    let mut m = identity(d);
    let t = |k| t_pow(k);
    let neg = |k| -t_pow(k);
    let s = if positive { 1 } else { -1 };
    if d == 1 {
        m[0][0] = neg(s);
        return m;
    }
    let r = i - 1;
    if i == 1 {
        m[0][0] = neg(s);
        m[0][1] = if positive { QLaurent::one() } else { t(-1) };
    } else if i == n - 1 {
        m[r][r - 1] = if positive { t(1) } else { QLaurent::one() };
        m[r][r] = neg(s);
    } else {
        m[r][r - 1] = if positive { t(1) } else { QLaurent::one() };
        m[r][r] = neg(s);
        m[r][r + 1] = if positive { QLaurent::one() } else { t(-1) };
    }
    m
}

/// Shifts to lowest exponent zero with constant term `+1`.
fn normalize(p: &QLaurent) -> Result<QLaurent> {
    let lo = p.min_exp().ok_or_else(|| Error::Internal("vanishing Alexander polynomial".into()))?;
    let mut out = p.shift(-lo);
    if out.coeff(0) < 0.into() {
        out = -out;
    }
    if !out.is_integral() {
        return Err(Error::Internal(format!("Alexander polynomial {} has half-integer powers", out.render("x"))));
    }
    Ok(out)
}

fn require_knot(word: &BraidWord) -> Result<()> {
    word.analyze().require_homogeneous_knot().map_err(Error::from)
}

/// `Δ = det(I - B̄(β)) / (1 + x + ... + x^{n-1})` from the reduced Burau
/// representation.
pub fn burau_delta(word: &BraidWord) -> Result<QLaurent> {
    let n = word.strands();
    let mut acc = identity(n - 1);
    for &l in word.letters() {
        acc = mat_mul(&burau_generator(n, l.unsigned_abs() as usize, l > 0), &acc);
    }
    let det = det_laurent(one_minus(&acc));
    let den: QLaurent = (0..n as i64).map(t_pow).sum();
    let q = det.div_exact(&den).map_err(|_| Error::Internal("Burau determinant not divisible".into()))?;
    normalize(&q)
}

/// `Δ` from the weight-one sector of the braid representation at `q = 1`:
/// `det(I - V_{n,1}(β)) x^{-w/2} (x^{1/2} - x^{-1/2}) / (x^{n/2} - x^{-n/2})`.
pub fn lawrence_delta(word: &BraidWord) -> Result<QLaurent> {
    let n = word.strands() as i64;
    let rep = rep_matrix(word, 1, Convention::Half);
    let d = rep.dim();
    let mut dense = vec![vec![QLaurent::zero(); d]; d];
    for (from, to, v) in rep.entries() {
        let (j, i) = (rep.index_of(from).unwrap(), rep.index_of(to).unwrap());
        // At q = 1 the entry becomes a polynomial in x alone.
        dense[i][j] = v.terms().map(|(e, c)| QLaurent::monomial(c.eval_one(), e)).sum();
    }
    let det = det_laurent(one_minus(&dense)).shift(-word.writhe());
    let num = &det * &QLaurent::from_terms([(1, 1), (-1, -1)]);
    let den = QLaurent::from_terms([(n, 1), (-n, -1)]);
    let q = num
        .div_exact(&den)
        .map_err(|_| Error::Internal("weight-one determinant not divisible".into()))?;
    normalize(&q)
}

/// Normalized `Δ` and `(1-x)/Δ` up to `x^(order/2)`. Both routes must agree.
pub fn alexander_classical(word: &BraidWord, order: i64) -> Result<Alexander> {
    require_knot(word)?;
    let a = lawrence_delta(word)?;
    let b = burau_delta(word)?;
    if a != b {
        return Err(Error::Internal(format!(
            "Alexander routes disagree: {} vs {}",
            a.render("x"),
            b.render("x")
        )));
    }
    let delta = XSeries::exact(a.terms().map(|(e, c)| (e, QLaurent::from(c.clone()))));
    let one_minus_x = XSeries::exact([(0, QLaurent::one()), (2, QLaurent::from(-1))]);
    let inv = delta.truncate(order).recip()?;
    let inv_delta = (&inv * &one_minus_x).truncate(order);
    debug_assert!(delta.order() == UNBOUNDED);
    Ok(Alexander { delta, inv_delta })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    fn poly(c: &[i64]) -> QLaurent {
        QLaurent::from_terms(c.iter().enumerate().map(|(k, &v)| (2 * k as i64, v)))
    }

    #[test]
    fn burau_inverses() {
        for n in 2..=5 {
            for i in 1..n {
                let p = mat_mul(&burau_generator(n, i, true), &burau_generator(n, i, false));
                assert_eq!(p, identity(n - 1), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn burau_braid_relation() {
        let n = 4;
        for i in 1..n - 1 {
            let a = burau_generator(n, i, true);
            let b = burau_generator(n, i + 1, true);
            assert_eq!(mat_mul(&mat_mul(&a, &b), &a), mat_mul(&mat_mul(&b, &a), &b));
        }
    }

    #[test]
    fn small_knots() {
        assert_eq!(burau_delta(&word("1 1 1")).unwrap(), poly(&[1, -1, 1]));
        assert_eq!(burau_delta(&word("1 -2 1 -2")).unwrap(), poly(&[1, -3, 1]));
        assert_eq!(burau_delta(&word("1")).unwrap(), poly(&[1]));
        assert_eq!(lawrence_delta(&word("1 1 1")).unwrap(), poly(&[1, -1, 1]));
        assert_eq!(lawrence_delta(&word("1 -2 1 -2")).unwrap(), poly(&[1, -3, 1]));
    }

    #[test]
    fn trefoil_series() {
        let a = alexander_classical(&word("1 1 1"), 12).unwrap();
        assert_eq!(a.delta.to_string(), "1 - x + x^2");
        assert_eq!(a.inv_delta.to_string(), "1 - x^2 - x^3 + x^5 + x^6 + O(x^7)");
        let u = alexander_classical(&word("1"), 10).unwrap();
        assert_eq!(u.inv_delta.to_string(), "1 - x + O(x^6)");
    }

    #[test]
    fn rejects_links_and_mixed_columns() {
        assert!(alexander_classical(&word("1 1"), 4).is_err());
        assert!(alexander_classical(&word("1 -1 1"), 4).is_err());
    }
}
