//! `Φ` and `Ẑ` for closures of homogeneous braids.

mod closed_form;
mod homogeneous;
mod positive;

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidStats, BraidWord};
use crate::error::{Error, Result};
use crate::lawrence::Convention;
use crate::ring::{QLaurent, XSeries};

pub use closed_form::{closed_form, ClosedForm};
pub use homogeneous::{phi_homogeneous, PhiOptions, Transfer, Transition};
pub use positive::{phi_positive, phi_positive_cutoff};

/// The monomial `sign * q^(q_exp_half/2) * x^(x_exp_half/2)` relating `Φ`
/// and `Ẑ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prefactor {
    pub sign: i8,
    pub q_exp_half: i64,
    pub x_exp_half: i64,
}

impl Prefactor {
    /// `(-1)^{1+cr_-+col_-} q^{(w-(n-1))/2 + col_-} x^{(w-n)/2 + cr_-}`.
    pub fn from_stats(s: &BraidStats) -> Self {
        let (w, n) = (s.writhe, s.n as i64);
        let (cr, col) = (s.cr_minus as i64, s.col_minus as i64);
        Prefactor {
            sign: if (1 + cr + col) % 2 == 0 { 1 } else { -1 },
            q_exp_half: w - (n - 1) + 2 * col,
            x_exp_half: w - n + 2 * cr,
        }
    }

    /// The same monomial from genus and `λ`: `(-1)^{1+λ} q^{g-λ} x^{g-1/2}`.
    pub fn from_genus(genus: i64, lambda: i64) -> Self {
        Prefactor {
            sign: if (1 + lambda) % 2 == 0 { 1 } else { -1 },
            q_exp_half: 2 * (genus - lambda),
            x_exp_half: 2 * genus - 1,
        }
    }

    pub fn apply(&self, s: &XSeries) -> XSeries {
        s.mul_monomial(self.sign, self.q_exp_half, self.x_exp_half)
    }

    /// Raw form, e.g. `-1 * q^(2/2) * x^(1/2)`.
    pub fn render(&self) -> String {
        format!("{} * q^({}/2) * x^({}/2)", self.sign, self.q_exp_half, self.x_exp_half)
    }
}

/// Output of [`zhat`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZhatResult {
    pub braid: BraidWord,
    pub phi: XSeries,
    pub zhat: XSeries,
    pub prefactor: Prefactor,
    pub stats: BraidStats,
}

/// Pipeline settings shared by `phi` and `zhat`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ZhatOptions {
    pub convention: Convention,
    pub phi: PhiOptions,
}

/// `Φ` up to `x^order`, by traces for positive words and by the hat-label
/// state sum otherwise. The result must begin `1 + ...` with integral
/// exponents.
pub fn phi(word: &BraidWord, order: u32, opts: ZhatOptions) -> Result<XSeries> {
    let stats = word.analyze();
    stats.require_homogeneous_knot()?;
    let phi = if stats.cr_minus == 0 {
        phi_positive(word, order, opts.convention)?
    } else {
        phi_homogeneous(word, order, opts.phi)?
    };
    if !phi.coeff(0).is_one() || phi.min_exp() != Some(0) {
        return Err(Error::Internal(format!("series does not begin with 1: {phi}")));
    }
    if !phi.is_integral() || phi.terms().any(|(_, c)| !c.is_integral()) {
        return Err(Error::Internal(format!("half-integer powers survive: {phi}")));
    }
    Ok(phi)
}

/// `Ẑ = prefactor * Φ` for a homogeneous knot braid.
pub fn zhat(word: &BraidWord, order: u32, opts: ZhatOptions) -> Result<ZhatResult> {
    let stats = word.analyze();
    stats.require_homogeneous_knot()?;
    let prefactor = Prefactor::from_stats(&stats);
    let alt = Prefactor::from_genus(stats.genus, stats.lambda());
    if prefactor != alt || 2 * stats.genus != stats.c as i64 - stats.n as i64 + 1 {
        return Err(Error::Internal(format!(
            "prefactor mismatch: {} vs {}",
            prefactor.render(),
            alt.render()
        )));
    }
    let phi = phi(word, order, opts)?;
    let zhat = prefactor.apply(&phi);
    Ok(ZhatResult { braid: word.clone(), phi, zhat, prefactor, stats })
}

impl ZhatResult {
    /// Text block with one `key: value` per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "braid: {}", self.braid).unwrap();
        writeln!(out, "n: {}", self.stats.n).unwrap();
        writeln!(out, "writhe: {}", self.stats.writhe).unwrap();
        writeln!(out, "genus: {}", self.stats.genus).unwrap();
        writeln!(out, "lambda: {}", self.stats.lambda()).unwrap();
        writeln!(out, "prefactor: {}", self.prefactor.render()).unwrap();
        writeln!(out, "phi: {}", self.phi).unwrap();
        writeln!(out, "zhat: {}", self.zhat).unwrap();
        out
    }

    pub fn to_json(&self) -> ZhatJson {
        ZhatJson {
            braid: self.braid.to_string(),
            n: self.stats.n,
            writhe: self.stats.writhe,
            prefactor: self.prefactor,
            phi: series_to_json(&self.phi),
            zhat: series_to_json(&self.zhat),
        }
    }
}

/// One `c * q^(p/2)` term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub q_exp_half: i64,
    pub value: String,
}

/// One `(...) * x^(p/2)` term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub x_exp_half: i64,
    pub coeff: Vec<CoeffJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZhatJson {
    pub braid: String,
    pub n: usize,
    pub writhe: i64,
    pub prefactor: Prefactor,
    pub phi: Vec<TermJson>,
    pub zhat: Vec<TermJson>,
}

pub fn series_to_json(s: &XSeries) -> Vec<TermJson> {
    s.terms()
        .map(|(e, c)| TermJson {
            x_exp_half: e,
            coeff: c.terms().map(|(qe, v)| CoeffJson { q_exp_half: qe, value: v.to_string() }).collect(),
        })
        .collect()
}

/// Inverse of [`series_to_json`]; `order` is the truncation to attach.
pub fn series_from_json(terms: &[TermJson], order: i64) -> Result<XSeries> {
    let mut out = Vec::new();
    for t in terms {
        let mut c = Vec::new();
        for k in &t.coeff {
            let v: BigInt = k
                .value
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad integer {:?}", k.value)))?;
            c.push((k.q_exp_half, v));
        }
        out.push((t.x_exp_half, QLaurent::from_terms(c)));
    }
    Ok(XSeries::from_terms(out, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    #[test]
    fn prefactors() {
        let r = zhat(&word("1 1 1"), 4, ZhatOptions::default()).unwrap();
        assert_eq!(r.prefactor, Prefactor { sign: -1, q_exp_half: 2, x_exp_half: 1 });
        assert_eq!(r.prefactor.render(), "-1 * q^(2/2) * x^(1/2)");
        let r = zhat(&word("1 -2 1 -2"), 2, ZhatOptions::default()).unwrap();
        assert_eq!(r.prefactor, Prefactor { sign: 1, q_exp_half: 0, x_exp_half: 1 });
        assert!(r.zhat.to_string().starts_with("x^(1/2) + 2*x^(3/2)"));
    }

    #[test]
    fn json_round_trip() {
        let r = zhat(&word("1 -2 1 -2"), 3, ZhatOptions::default()).unwrap();
        let js = serde_json::to_string(&r.to_json()).unwrap();
        let back: ZhatJson = serde_json::from_str(&js).unwrap();
        assert_eq!(series_from_json(&back.phi, r.phi.order()).unwrap(), r.phi);
        assert_eq!(series_from_json(&back.zhat, r.zhat.order()).unwrap(), r.zhat);
    }

    #[test]
    fn rejects_links() {
        assert!(zhat(&word("1 1"), 3, ZhatOptions::default()).is_err());
    }
}
