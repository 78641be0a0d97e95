//! `Φ` for positive braids from graded traces of `V_{n,m}`.

use crate::braid::BraidWord;
use crate::error::BraidError;
use crate::error::{Error, Result};
use crate::lawrence::{graded_trace, Convention};
use crate::ring::XSeries;

/// `(1 - q^{2m+n-1} x^n) q^{-m} Tr_{V_{n,m}}(β)` for each sector.
fn sector_terms(word: &BraidWord, m_max: u32, xmax: i64, conv: Convention) -> Vec<XSeries> {
    let n = word.strands() as i64;
    graded_trace(word, m_max, conv)
        .into_iter()
        .enumerate()
        .map(|(m, tr)| {
            let m = m as i64;
            let tr = tr.truncate(xmax);
            let axis = tr.mul_monomial(-1, 2 * (2 * m + n - 1), 2 * n);
            (&tr + &axis).mul_monomial(1, -2 * m, 0).truncate(xmax)
        })
        .collect()
}

/// The positive-braid sum with an explicit sector cutoff `m_max`.
pub fn phi_positive_cutoff(word: &BraidWord, order: u32, m_max: u32, conv: Convention) -> Result<XSeries> {
    let stats = word.analyze();
    stats.require_homogeneous_knot()?;
    if stats.cr_minus > 0 {
        return Err(BraidError::NotPositive.into());
    }
    let xmax = 2 * order as i64;
    let mut phi = XSeries::zero(xmax);
    for t in &sector_terms(word, m_max, xmax, conv) {
        phi += t;
    }
    Ok(phi)
}

/// `Φ = Σ_m (1 - q^{2m+n-1} x^n) q^{-m} Tr_{V_{n,m}}(β)` up to `x^order`.
///
/// Every state of weight `m` has `x` degree at least `m`, so sectors above
/// `order` cannot contribute; two extra sectors are computed and must
/// vanish.
pub fn phi_positive(word: &BraidWord, order: u32, conv: Convention) -> Result<XSeries> {
    let stats = word.analyze();
    stats.require_homogeneous_knot()?;
    if stats.cr_minus > 0 {
        return Err(BraidError::NotPositive.into());
    }
    let xmax = 2 * order as i64;
    let terms = sector_terms(word, order + 2, xmax, conv);
    let mut phi = XSeries::zero(xmax);
    for t in &terms[..=order as usize] {
        phi += t;
    }
    if terms[order as usize + 1..].iter().any(|t| !t.is_zero()) {
        return Err(Error::Internal(format!("sector cutoff {order} is not stable")));
    }
    Ok(phi)
}
