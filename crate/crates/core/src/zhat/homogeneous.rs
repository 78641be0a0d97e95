//! Transfer-matrix state sum over column labels for homogeneous braids.
//!
//! Positive columns carry ordinary labels. Negative columns carry a hat
//! label `h >= 0`, standing for the inverted label `-1 - h`. A state sum
//! over closed label configurations, weighted by the axis loop, gives `Φ`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::ring::{QBinomTable, QLaurent, XSeries};

/// Per-column labels plus accumulated `x` degree in half-units.
type Key = (Vec<u32>, i64);

/// One outgoing transition of a crossing: new labels, added `x` degree in
/// half-units, and the `q` weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub labels: Vec<u32>,
    pub dx: i64,
    pub weight: QLaurent,
}

/// Context shared by every crossing of one braid.
pub struct Transfer<'a> {
    /// `+1` or `-1` per column.
    pub signs: &'a [i8],
    pub table: &'a QBinomTable,
    /// Read negative crossings in the mirrored orientation, exchanging the
    /// roles of the incoming and outgoing hat labels in the sign and the
    /// quadratic exponent.
    pub debug_mirror: bool,
}

fn parity(k: i64) -> QLaurent {
    QLaurent::from(if k % 2 == 0 { 1 } else { -1 })
}

impl Transfer<'_> {
    /// Conserved charge `Σ_{positive} ℓ - Σ_{negative} ℓ`.
    pub fn charge(&self, labels: &[u32]) -> i64 {
        labels.iter().zip(self.signs).map(|(&l, &s)| s as i64 * l as i64).sum()
    }

    /// Options for a neighbour column. A positive neighbour gives up to its
    /// label; a hat neighbour accepts up to `hat_limit`.
    fn neighbour_range(&self, labels: &[u32], col: Option<usize>, hat_limit: i64) -> Vec<i64> {
        match col {
            None => vec![0],
            Some(j) if self.signs[j] > 0 => (0..=labels[j] as i64).collect(),
            Some(_) => (0..=hat_limit.max(0)).collect(),
        }
    }

    fn shift_neighbour(&self, labels: &mut [u32], col: Option<usize>, k: i64) {
        if let Some(j) = col {
            let v = labels[j] as i64 + if self.signs[j] > 0 { -k } else { k };
            labels[j] = v as u32;
        }
    }

    /// All transitions of letter `letter` from `labels` adding at most
    /// `budget` half-units of `x`.
    pub fn transitions(&self, labels: &[u32], letter: i32, budget: i64) -> Vec<Transition> {
        let col = letter.unsigned_abs() as usize - 1;
        let left = col.checked_sub(1);
        let right = (col + 1 < labels.len()).then_some(col + 1);
        let mut out = Vec::new();
        if letter > 0 {
            let a = labels[col] as i64;
            for b in self.neighbour_range(labels, left, budget - 2 * a) {
                for c in self.neighbour_range(labels, right, budget - 2 * a - b) {
                    let dx = 2 * a + b + c;
                    if dx > budget {
                        continue;
                    }
                    let mut nl = labels.to_vec();
                    self.shift_neighbour(&mut nl, left, b);
                    self.shift_neighbour(&mut nl, right, c);
                    nl[col] = (a + b + c) as u32;
                    let w = &self.table.multinom3(a, b, c).shift(a * a + a + b + c) * &parity(a);
                    out.push(Transition { labels: nl, dx, weight: w });
                }
            }
        } else {
            let h = labels[col] as i64;
            for big_a in self.neighbour_range(labels, left, h) {
                for big_c in self.neighbour_range(labels, right, h - big_a) {
                    let hp = h - big_a - big_c;
                    let dx = h + hp;
                    if hp < 0 || dx > budget {
                        continue;
                    }
                    let mut nl = labels.to_vec();
                    self.shift_neighbour(&mut nl, left, big_a);
                    self.shift_neighbour(&mut nl, right, big_c);
                    nl[col] = hp as u32;
                    let tri = self.table.multinom3(big_a, hp, big_c).mirror();
                    let w = if self.debug_mirror {
                        &tri.shift(-(h * h + hp)) * &parity(h)
                    } else {
                        &tri.shift(-(hp * hp + h)) * &parity(hp)
                    };
                    out.push(Transition { labels: nl, dx, weight: w });
                }
            }
        }
        out
    }

    /// Diagonal element `<ℓ|β|ℓ>` as a series in `x`, up to `xmax` half-units.
    pub fn diagonal(&self, word: &BraidWord, init: &[u32], xmax: i64) -> XSeries {
        let mut states: HashMap<Key, QLaurent> = HashMap::new();
        states.insert((init.to_vec(), 0), QLaurent::one());
        for &letter in word.letters() {
            let mut next: HashMap<Key, QLaurent> = HashMap::new();
            for ((labels, xd), w) in &states {
                for t in self.transitions(labels, letter, xmax - xd) {
                    let slot = next.entry((t.labels, xd + t.dx)).or_default();
                    *slot += &(w * &t.weight);
                }
            }
            next.retain(|_, v| !v.is_zero());
            states = next;
            if states.is_empty() {
                break;
            }
        }
        let mut out = XSeries::zero(xmax);
        for ((labels, xd), w) in states {
            if labels == init {
                out.add_term_owned(xd, w);
            }
        }
        out
    }

    /// `Σ_ε (-x^n)^ε q^{(2ε-1)m̃ + ε(col_+ - col_-)}` for the given charge.
    pub fn axis_factor(&self, n: usize, charge: i64, xmax: i64) -> XSeries {
        let spread: i64 = self.signs.iter().map(|&s| s as i64).sum();
        let mut out = XSeries::zero(xmax);
        out.add_term_owned(0, QLaurent::monomial(1, -2 * charge));
        out.add_term_owned(2 * n as i64, QLaurent::monomial(-1, 2 * (charge + spread)));
        out
    }
}

fn initial_states(cols: usize, lo_excl: Option<u32>, hi: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..cols {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=hi).map(move |v| {
                    let mut p = p.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    // With a lower bound, keep only the shell outside the smaller box.
    if let Some(lo) = lo_excl {
        out.retain(|s| s.iter().any(|&v| v > lo));
    }
    out
}

/// `Σ_{ℓ} axis(ℓ) <ℓ|β|ℓ>` over initial labels in the given set.
fn state_sum(word: &BraidWord, tr: &Transfer<'_>, inits: &[Vec<u32>], xmax: i64) -> XSeries {
    let n = word.strands();
    let parts: Vec<XSeries> = inits
        .par_iter()
        .map(|init| {
            let d = tr.diagonal(word, init, xmax);
            if d.is_zero() {
                return d;
            }
            &d * &tr.axis_factor(n, tr.charge(init), xmax)
        })
        .collect();
    let mut acc = XSeries::zero(xmax);
    for p in &parts {
        acc += p;
    }
    acc
}

/// Settings for the homogeneous state sum.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PhiOptions {
    /// Largest initial label per column; defaults to the order.
    pub cap: Option<u32>,
    /// Use the mirrored orientation at negative crossings. It does not
    /// reproduce the figure-eight series and exists for comparison only.
    pub debug_mirror: bool,
    /// Skip the cap + 2 stability check.
    pub skip_stability: bool,
}

/// `Φ` for a homogeneous knot braid, up to `x^order`.
pub fn phi_homogeneous(word: &BraidWord, order: u32, opts: PhiOptions) -> Result<XSeries> {
    let stats = word.analyze();
    stats.require_homogeneous_knot()?;
    let xmax = 2 * order as i64;
    let cap = opts.cap.unwrap_or(order);
    // Labels never exceed the x budget, so this table covers every lookup.
    let table = QBinomTable::new(xmax as usize + cap as usize + 4);
    let tr = Transfer { signs: &stats.column_sign, table: &table, debug_mirror: opts.debug_mirror };
    let cols = stats.column_sign.len();
    let phi = state_sum(word, &tr, &initial_states(cols, None, cap), xmax);
    if !opts.skip_stability {
        let shell = state_sum(word, &tr, &initial_states(cols, Some(cap), cap + 2), xmax);
        if !shell.is_zero() {
            return Err(Error::Internal(format!("label cap {cap} is not stable up to x^{order}")));
        }
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fig8() -> BraidWord {
        BraidWord::parse("1 -2 1 -2").unwrap()
    }

    #[test]
    fn figure_eight_leading_terms() {
        let phi = phi_homogeneous(&fig8(), 3, PhiOptions::default()).unwrap();
        assert_eq!(
            phi.to_string(),
            "1 + 2*x + (q^-1 + 3 + q)*x^2 + (2*q^-2 + 2*q^-1 + 5 + 2*q + 2*q^2)*x^3 + O(x^4)"
        );
    }

    #[test]
    fn mirrored_orientation_differs() {
        let opts = PhiOptions { debug_mirror: true, skip_stability: true, ..Default::default() };
        let a = phi_homogeneous(&fig8(), 3, opts).unwrap();
        let b = phi_homogeneous(&fig8(), 3, PhiOptions::default()).unwrap();
        assert_ne!(a, b);
    }

    proptest! {
        #[test]
        fn transitions_conserve_charge(
            labels in proptest::collection::vec(0u32..4, 3),
            col in 1i32..=3,
            signs in proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], 3),
        ) {
            let table = QBinomTable::new(30);
            let tr = Transfer { signs: &signs, table: &table, debug_mirror: false };
            let letter = col * signs[col as usize - 1] as i32;
            for t in tr.transitions(&labels, letter, 16) {
                prop_assert_eq!(tr.charge(&t.labels), tr.charge(&labels));
            }
        }
    }
}
