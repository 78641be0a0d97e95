//! The braid group representation on weight-`m` label tuples `V_{n,m}`.
//!
//! A basis vector of `V_{n,m}` is a tuple `(a_1, ..., a_{n-1})` of
//! nonnegative integers summing to `m`. The generator `σ_i` collects `b`
//! units from the left neighbour and `c` from the right neighbour into
//! column `i`.

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{BraidError, Error, Result};
use crate::matrix::{GradedMatrix, State};
use crate::ring::{QBinomTable, QLaurent, XSeries, UNBOUNDED};

/// Which crossing weights to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Symmetric half-integer powers of `x` at every crossing.
    #[default]
    Half,
    /// Integer weights counting under-crossings, `(qx)^{a+c}`.
    Under,
}

/// Compositions of `m` into `parts` nonnegative parts, lexicographic.
pub fn compositions(parts: usize, m: u32) -> Vec<State> {
    fn rec(parts: usize, m: u32, prefix: &mut State, out: &mut Vec<State>) {
        if parts == 1 {
            prefix.push(m);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in 0..=m {
            prefix.push(a);
            rec(parts - 1, m - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if m == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(parts, m, &mut Vec::new(), &mut out);
    out
}

/// Basis of `V_{n,m}`.
pub fn states(n: usize, m: u32) -> Vec<State> {
    compositions(n - 1, m)
}

fn mono(sign: i64, q_half: i64, x_half: i64, coeff: &QLaurent) -> XSeries {
    let c = coeff.shift(q_half);
    XSeries::exact([(x_half, if sign < 0 { -c } else { c })])
}

/// Weight of the transition with labels `a, b, c` at a crossing.
fn crossing_weight(table: &QBinomTable, a: i64, b: i64, c: i64, sign: i8, conv: Convention) -> XSeries {
    let tri = table.multinom3(a, b, c);
    let s = if a % 2 == 0 { 1 } else { -1 };
    match (conv, sign > 0) {
        (Convention::Half, true) => mono(s, a * a + a + b + c, 2 * a + b + c, &tri),
        (Convention::Half, false) => mono(s, -(a * a + a + b + c), -(2 * a + b + c), &tri.mirror()),
        (Convention::Under, true) => mono(s, a * (a - 1) + 2 * (a + c), 2 * (a + c), &tri),
        // The mirror of the positive weight with the neighbour roles swapped.
        (Convention::Under, false) => mono(s, -(a * (a - 1) + 2 * (a + b)), -2 * (a + b), &tri.mirror()),
    }
}

fn check_index(n: usize, i: usize) -> Result<(), BraidError> {
    if i == 0 || i >= n {
        return Err(BraidError::IndexOutOfRange { pos: 1, index: i as u32, strands: n });
    }
    Ok(())
}

/// Closed formula for `σ_i^{sign}` on `V_{n,m}`. For `sign = -1` this is the
/// mirror formula, which is only trusted after [`mirror_inverse_holds`].
fn closed_generator(n: usize, m: u32, i: usize, sign: i8, conv: Convention) -> GradedMatrix {
    let table = QBinomTable::new(m as usize);
    let mut g = GradedMatrix::zero(n, m as usize, states(n, m));
    for st in g.basis().to_vec() {
        let a = st[i - 1];
        let b_max = if i >= 2 { st[i - 2] } else { 0 };
        let c_max = if i + 1 < n { st[i] } else { 0 };
        for b in 0..=b_max {
            for c in 0..=c_max {
                let mut t = st.clone();
                if i >= 2 {
                    t[i - 2] -= b;
                }
                if i + 1 < n {
                    t[i] -= c;
                }
                t[i - 1] = a + b + c;
                let w = crossing_weight(&table, a as i64, b as i64, c as i64, sign, conv);
                g.add_entry(&st, &t, &w);
            }
        }
    }
    g
}

/// Whether the mirror formula inverts every generator for `n <= 4, m <= 4`.
/// Computed once per convention.
pub fn mirror_inverse_holds(conv: Convention) -> bool {
    static HALF: OnceLock<bool> = OnceLock::new();
    static UNDER: OnceLock<bool> = OnceLock::new();
    let cell = match conv {
        Convention::Half => &HALF,
        Convention::Under => &UNDER,
    };
    *cell.get_or_init(|| {
        (2..=4usize).all(|n| {
            (0..=4u32).all(|m| {
                (1..n).all(|i| {
                    let p = closed_generator(n, m, i, 1, conv);
                    let q = closed_generator(n, m, i, -1, conv);
                    p.compose(&q).is_identity()
                })
            })
        })
    })
}

/// Matrix of `σ_i^{sign}` on `V_{n,m}`.
pub fn generator_matrix(n: usize, m: u32, i: usize, sign: i8, conv: Convention) -> Result<GradedMatrix, BraidError> {
    check_index(n, i)?;
    if sign > 0 || mirror_inverse_holds(conv) {
        return Ok(closed_generator(n, m, i, sign, conv));
    }
    Ok(closed_generator(n, m, i, 1, conv)
        .inverse_unit_pivot()
        .expect("generator matrices have unit pivots"))
}

/// Matrix of the whole word on `V_{n,m}`; the leftmost letter acts first.
pub fn rep_matrix(word: &BraidWord, m: u32, conv: Convention) -> GradedMatrix {
    let n = word.strands();
    let mut cache: HashMap<i32, GradedMatrix> = HashMap::new();
    let mut acc = GradedMatrix::identity(n, m as usize, states(n, m));
    for &l in word.letters() {
        let g = cache.entry(l).or_insert_with(|| {
            generator_matrix(n, m, l.unsigned_abs() as usize, l.signum() as i8, conv)
                .expect("word letters are in range")
        });
        acc = g.compose(&acc);
    }
    acc
}

/// `Tr_{V_{n,m}}(β)` for `m = 0..=m_max`, sectors evaluated in parallel.
pub fn graded_trace(word: &BraidWord, m_max: u32, conv: Convention) -> Vec<XSeries> {
    (0..=m_max).into_par_iter().map(|m| rep_matrix(word, m, conv).trace()).collect()
}

/// `Σ_{m,ε} Tr_{V_{n,m}}(β)|_{x = q^{-1+2ε}} z^m q^{wε} (-z^n)^ε` up to
/// `z^z_order`, as a series in `z` (rendered with variable `x` unless asked
/// otherwise). For a knot closure this is `1 - z`.
pub fn unknot_closure_check(word: &BraidWord, z_order: u32) -> Result<XSeries> {
    let stats = word.analyze();
    if !stats.is_knot() {
        return Err(Error::Braid(BraidError::NotAKnot(stats.closure_components)));
    }
    let n = word.strands() as i64;
    let w = word.writhe();
    let traces = graded_trace(word, z_order, Convention::Half);
    let mut out = XSeries::zero(2 * z_order as i64);
    for (m, tr) in traces.iter().enumerate() {
        for eps in 0..=1i64 {
            let z = m as i64 + n * eps;
            if z > z_order as i64 {
                continue;
            }
            let v = tr.eval_x_at_q_power(2 * eps - 1).shift(2 * w * eps);
            let v = if eps == 1 { -v } else { v };
            out += &XSeries::monomial(v, 2 * z, UNBOUNDED);
        }
    }
    Ok(out)
}
