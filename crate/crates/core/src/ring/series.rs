use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::laurent::QLaurent;
use super::render::{fmt_monomial, push_signed_term};
use crate::error::RingError;

/// Order sentinel for series that carry every term (matrix entries,
/// polynomials).
pub const UNBOUNDED: i64 = i64::MAX;

/// Power series in `x^{1/2}` with [`QLaurent`] coefficients, truncated at a
/// fixed order.
///
/// `order` is measured in half-units of `x` and is inclusive: a series of
/// order `2N` keeps every term up to and including `x^N`. Binary operations
/// between series of different orders produce the smaller order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XSeries {
    order: i64,
    terms: BTreeMap<i64, QLaurent>,
}

impl XSeries {
    pub fn zero(order: i64) -> Self {
        Self { order, terms: BTreeMap::new() }
    }

    pub fn one(order: i64) -> Self {
        Self::constant(QLaurent::one(), order)
    }

    pub fn constant(c: QLaurent, order: i64) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c * x^(x_half/2)`.
    pub fn monomial(c: QLaurent, x_half: i64, order: i64) -> Self {
        let mut s = Self::zero(order);
        s.add_term(x_half, &c);
        s
    }

    /// An exact (untruncated) series.
    pub fn exact<I: IntoIterator<Item = (i64, QLaurent)>>(terms: I) -> Self {
        Self::from_terms(terms, UNBOUNDED)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, QLaurent)>>(terms: I, order: i64) -> Self {
        let mut s = Self::zero(order);
        for (e, c) in terms {
            s.add_term(e, &c);
        }
        s
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order == UNBOUNDED
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(QLaurent::is_one)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &QLaurent)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x_half: i64) -> QLaurent {
        self.terms.get(&x_half).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when only whole powers of `x` occur.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    pub(crate) fn add_term(&mut self, x_half: i64, c: &QLaurent) {
        if x_half > self.order || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(x_half).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&x_half);
        }
    }

    pub(crate) fn add_term_owned(&mut self, x_half: i64, c: QLaurent) {
        if x_half > self.order || c.is_zero() {
            return;
        }
        match self.terms.entry(x_half) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Drops every term above `order` and lowers the recorded order.
    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        Self {
            order,
            terms: self.terms.range(..=order).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    /// Equality of the two series on their common range.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let ord = self.order.min(other.order);
        self.truncate(ord).terms == other.truncate(ord).terms
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale_q(&self, c: &QLaurent) -> Self {
        Self::from_terms(self.terms().map(|(e, a)| (e, a * c)), self.order)
    }

    /// Multiplies by `sign * q^(q_half/2) * x^(x_half/2)`. The order shifts
    /// along with the exponents.
    pub fn mul_monomial(&self, sign: i8, q_half: i64, x_half: i64) -> Self {
        let order = if self.is_exact() { UNBOUNDED } else { self.order + x_half };
        Self {
            order,
            terms: self
                .terms()
                .map(|(e, c)| {
                    let c = c.shift(q_half);
                    (e + x_half, if sign < 0 { -c } else { c })
                })
                .collect(),
        }
    }

    /// Substitutes `q -> q^{-1}` in every coefficient.
    pub fn mirror_q(&self) -> Self {
        Self { order: self.order, terms: self.terms().map(|(e, c)| (e, c.mirror())).collect() }
    }

    /// Substitutes `x -> x^{-1}`. Only meaningful for exact series.
    pub fn invert_x(&self) -> Self {
        debug_assert!(self.is_exact());
        Self { order: UNBOUNDED, terms: self.terms().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Sets `q = 1` coefficientwise.
    pub fn at_q_one(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e, QLaurent::from(c.eval_one()))), self.order)
    }

    /// Coefficients at `q = 1` as a dense vector indexed by whole powers of
    /// `x` from `0` to `max_pow`. Fails on half-integer or negative powers.
    pub fn integer_coeffs(&self, max_pow: usize) -> Result<Vec<BigInt>, RingError> {
        let mut out = vec![BigInt::default(); max_pow + 1];
        for (e, c) in self.terms() {
            if e % 2 != 0 || e < 0 {
                return Err(RingError::NonIntegralExponent(e));
            }
            if let Some(slot) = out.get_mut((e / 2) as usize) {
                *slot = c.eval_one();
            }
        }
        Ok(out)
    }

    /// Evaluates an exact series at `x = q^p`, giving a Laurent polynomial.
    pub fn eval_x_at_q_power(&self, p: i64) -> QLaurent {
        self.terms().map(|(e, c)| c.shift(p * e)).sum()
    }

    /// Multiplicative inverse. The lowest term must be `±q^a x^e`.
    pub fn recip(&self) -> Result<Self, RingError> {
        let Some(e0) = self.min_exp() else {
            return Err(RingError::DivisionByZero);
        };
        let (sign, a) = self.terms[&e0].as_unit().ok_or(RingError::NonUnitLeading)?;
        if self.is_exact() {
            return Err(RingError::UnboundedInverse);
        }
        // self = lead * (1 + r) with r of positive order.
        let out_order = self.order - e0;
        let r = self.mul_monomial(sign, -a, -e0).sub_one();
        let mut acc = XSeries::one(out_order);
        let mut pow = XSeries::one(out_order);
        let neg_r = -&r.truncate(out_order);
        while !pow.is_zero() {
            pow = &pow * &neg_r;
            acc += &pow;
        }
        Ok(acc.mul_monomial(sign, -a, -e0))
    }

    fn sub_one(mut self) -> Self {
        self.add_term_owned(0, QLaurent::from(-1));
        self
    }

    /// Renders the terms with `var` as the series variable, without the
    /// truncation marker.
    pub fn render_terms(&self, var: &str) -> String {
        let mut out = String::new();
        for (e, c) in self.terms() {
            let xm = fmt_monomial(var, e);
            if let [(qe, k)] = c.terms().collect::<Vec<_>>()[..] {
                let qm = fmt_monomial("q", qe);
                let mut factors = Vec::new();
                if !k.abs().is_one() || (qm.is_empty() && xm.is_empty()) {
                    factors.push(k.abs().to_string());
                }
                factors.extend([qm, xm].into_iter().filter(|s| !s.is_empty()));
                push_signed_term(&mut out, k.is_negative(), &factors.join("*"));
            } else {
                let body = if xm.is_empty() { format!("({c})") } else { format!("({c})*{xm}") };
                push_signed_term(&mut out, false, &body);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_terms("x"))?;
        if !self.is_exact() {
            let next = if self.order % 2 == 0 { self.order + 2 } else { self.order + 1 };
            write!(f, " + O({})", fmt_monomial("x", next))?;
        }
        Ok(())
    }
}

impl AddAssign<&XSeries> for XSeries {
    fn add_assign(&mut self, rhs: &XSeries) {
        if rhs.order < self.order {
            *self = self.truncate(rhs.order);
        }
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&XSeries> for XSeries {
    fn sub_assign(&mut self, rhs: &XSeries) {
        *self += &-rhs;
    }
}

impl Add for &XSeries {
    type Output = XSeries;
    fn add(self, rhs: &XSeries) -> XSeries {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &XSeries {
    type Output = XSeries;
    fn sub(self, rhs: &XSeries) -> XSeries {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &XSeries {
    type Output = XSeries;
    fn neg(self) -> XSeries {
        XSeries { order: self.order, terms: self.terms().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Mul for &XSeries {
    type Output = XSeries;
    fn mul(self, rhs: &XSeries) -> XSeries {
        let mut out = XSeries::zero(self.order.min(rhs.order));
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                if e1 + e2 > out.order {
                    break;
                }
                out.add_term_owned(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64)]) -> XSeries {
        XSeries::exact(terms.iter().map(|&(e, c)| (e, QLaurent::from(c))))
    }

    #[test]
    fn mixed_order_truncates_to_minimum() {
        let a = XSeries::from_terms([(0, QLaurent::one()), (6, QLaurent::one())], 10);
        let b = XSeries::from_terms([(4, QLaurent::one())], 4);
        assert_eq!((&a + &b).order(), 4);
        assert_eq!((&a * &b).terms().count(), 1);
    }

    #[test]
    fn reciprocal_of_one_minus_x() {
        let s = poly(&[(0, 1), (2, -1)]).truncate(10);
        let r = s.recip().unwrap();
        assert_eq!(r, XSeries::from_terms((0..=5).map(|k| (2 * k, QLaurent::one())), 10));
        assert!((&r * &s).is_one());
    }

    #[test]
    fn reciprocal_with_q_unit_leading_term() {
        let s = XSeries::from_terms(
            [(2, QLaurent::monomial(-1, 3)), (4, QLaurent::from_terms([(0, 1), (2, 2)]))],
            12,
        );
        let r = s.recip().unwrap();
        assert!((&r * &s).truncate(8).is_one());
    }

    #[test]
    fn display() {
        let s = XSeries::from_terms(
            [
                (0, QLaurent::one()),
                (4, QLaurent::monomial(-1, 2)),
                (6, QLaurent::from_terms([(-2, 1), (0, 3), (2, 1)])),
            ],
            6,
        );
        assert_eq!(s.to_string(), "1 - q*x^2 + (q^-1 + 3 + q)*x^3 + O(x^4)");
        assert_eq!(poly(&[(1, -2)]).to_string(), "-2*x^(1/2)");
        assert_eq!(XSeries::zero(UNBOUNDED).to_string(), "0");
    }

    #[test]
    fn evaluation_at_q_power() {
        // (1 + x) at x = q^-1
        let s = poly(&[(0, 1), (2, 1)]);
        assert_eq!(s.eval_x_at_q_power(-1), QLaurent::from_terms([(0, 1), (-2, 1)]));
    }
}
