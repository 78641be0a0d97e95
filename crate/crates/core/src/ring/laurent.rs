use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::render::{fmt_monomial, push_signed_term};
use crate::error::RingError;

/// Sparse Laurent polynomial in `q^{1/2}` with arbitrary-precision integer
/// coefficients.
///
/// Exponents are stored as integer counts of half-units, so the term
/// `3*q^(5/2)` is stored under key `5`. Zero coefficients are never stored.
///
/// The same type doubles as a univariate Laurent polynomial in `x^{1/2}` for
/// the classical (`q = 1`) computations of the braid module; only the
/// variable name used when rendering differs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl QLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * q^(half_exp/2)`.
    pub fn monomial(c: impl Into<BigInt>, half_exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(half_exp, c);
        }
        Self { terms }
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order, as `(half_exp, coeff)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, half_exp: i64) -> BigInt {
        self.terms.get(&half_exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when every exponent is a whole power of the variable.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// If `self` is `±q^e`, returns `(±1, e)`.
    pub fn as_unit(&self) -> Option<(i8, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some((1, *e))
        } else if (-c).is_one() {
            Some((-1, *e))
        } else {
            None
        }
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn mirror(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplies by `q^(half_shift/2)`.
    pub fn shift(&self, half_shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + half_shift, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub(crate) fn add_term(&mut self, half_exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(half_exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Exact division. Fails if `divisor` is zero or does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, RingError> {
        let (Some(dmin), Some(dmax)) = (divisor.min_exp(), divisor.max_exp()) else {
            return Err(RingError::DivisionByZero);
        };
        let lead = divisor.terms[&dmax].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rmax) = rem.max_exp() {
            // Long division from the top. A remainder narrower than the
            // divisor can never vanish.
            if rmax - dmax < rem.min_exp().unwrap() - dmin {
                return Err(RingError::InexactDivision);
            }
            let rc = &rem.terms[&rmax];
            if !(rc % &lead).is_zero() {
                return Err(RingError::InexactDivision);
            }
            let t = Self::monomial(rc / &lead, rmax - dmax);
            rem -= &(&t * divisor);
            quot += &t;
        }
        Ok(quot)
    }

    /// Renders with the given variable name, e.g. `1 - 3*x + x^2`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.terms() {
            let mono = fmt_monomial(var, e);
            let mut factors = Vec::new();
            if !c.abs().is_one() || mono.is_empty() {
                factors.push(c.abs().to_string());
            }
            if !mono.is_empty() {
                factors.push(mono);
            }
            push_signed_term(&mut out, c.is_negative(), &factors.join("*"));
        }
        out
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

impl From<i64> for QLaurent {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl From<BigInt> for QLaurent {
    fn from(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }
}

impl AddAssign<&QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &QLaurent) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&QLaurent> for QLaurent {
    fn sub_assign(&mut self, rhs: &QLaurent) {
        for (e, c) in rhs.terms() {
            self.add_term(e, -c);
        }
    }
}

impl MulAssign<&QLaurent> for QLaurent {
    fn mul_assign(&mut self, rhs: &QLaurent) {
        *self = &*self * rhs;
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;

    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;

    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;

    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;

    fn neg(self) -> QLaurent {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for QLaurent {
    type Output = QLaurent;

    fn neg(self) -> QLaurent {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: QLaurent) -> QLaurent {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QLaurent> for QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: &QLaurent) -> QLaurent {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Sum for QLaurent {
    fn sum<I: Iterator<Item = QLaurent>>(iter: I) -> Self {
        let mut acc = QLaurent::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> QLaurent {
        QLaurent::from_terms(terms.iter().copied())
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let a = p(&[(0, 1), (2, -1)]);
        let b = p(&[(2, 1)]);
        assert_eq!(&a + &b, QLaurent::one());
        assert_eq!((&a - &a).len(), 0);
    }

    #[test]
    fn exact_division_by_q_number() {
        // (1 - q^3) / (1 - q) = 1 + q + q^2
        let num = p(&[(0, 1), (6, -1)]);
        let den = p(&[(0, 1), (2, -1)]);
        assert_eq!(num.div_exact(&den).unwrap(), p(&[(0, 1), (2, 1), (4, 1)]));
    }

    #[test]
    fn inexact_division_errors() {
        let num = p(&[(0, 1), (2, 1)]);
        let den = p(&[(0, 1), (2, -1)]);
        assert_eq!(num.div_exact(&den), Err(RingError::InexactDivision));
        assert_eq!(num.div_exact(&QLaurent::zero()), Err(RingError::DivisionByZero));
    }

    #[test]
    fn division_with_negative_exponents() {
        let a = p(&[(-3, 2), (1, -1)]);
        let b = p(&[(-2, 1), (4, 5), (5, 1)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[(0, 1), (2, -3), (4, 1)]).render("x"), "1 - 3*x + x^2");
        assert_eq!(p(&[(-2, 1), (0, 3), (2, 1)]).to_string(), "q^-1 + 3 + q");
        assert_eq!(p(&[(1, -1), (3, 2)]).to_string(), "-q^(1/2) + 2*q^(3/2)");
        assert_eq!(QLaurent::zero().to_string(), "0");
    }

    #[test]
    fn unit_detection() {
        assert_eq!(p(&[(3, -1)]).as_unit(), Some((-1, 3)));
        assert_eq!(p(&[(3, 2)]).as_unit(), None);
        assert_eq!(p(&[(0, 1), (1, 1)]).as_unit(), None);
    }
}
