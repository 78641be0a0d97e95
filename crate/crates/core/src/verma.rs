//! The Verma-module `Ř`-matrix, its braid action on weight spaces of
//! `V_∞(x)^{⊗n}`, and the Kohno trace identity against `V_{n,m}`.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::braid::BraidWord;
use crate::lawrence::{compositions, graded_trace, Convention};
use crate::matrix::GradedMatrix;
use crate::ring::{pochhammer, qbinom, XSeries, UNBOUNDED};

/// Highest-weight variable of each tensor factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Highest {
    /// `V_∞(x)`.
    X,
    /// `V_∞(x^{-1})`.
    XInv,
}

impl Highest {
    fn x_sign(self) -> i64 {
        match self {
            Highest::X => 1,
            Highest::XInv => -1,
        }
    }
}

/// `Ř(x)_{i,j}^{i',j'} = δ q^{jj'} (q x^{-1})^{(j+j'+1)/2} [i; j']_q
/// (q^{j+1} x^{-1}; q)_{i-j'}`.
pub fn r_entry(i: u32, j: u32, ip: u32, jp: u32, hw: Highest) -> XSeries {
    if i + j != ip + jp || jp > i {
        return XSeries::zero(UNBOUNDED);
    }
    let (i, j, jp) = (i as i64, j as i64, jp as i64);
    let s = hw.x_sign();
    let k = j + jp + 1;
    let head = XSeries::exact([(-s * k, qbinom(i, jp).shift(2 * j * jp + k))]);
    &head * &pochhammer(2 * (j + 1), -2 * s, (i - jp) as usize)
}

/// Entry of the inverse `Ř^{-1}`: the mirror `q -> q^{-1}, x -> x^{-1}` of
/// `Ř` with each index pair swapped.
pub fn r_inverse_entry(i: u32, j: u32, ip: u32, jp: u32, hw: Highest) -> XSeries {
    r_entry(j, i, jp, ip, hw).mirror_q().invert_x()
}

fn closed_generator(n: usize, m: u32, i: usize, sign: i8, hw: Highest) -> GradedMatrix {
    let mut g = GradedMatrix::zero(n, m as usize, compositions(n, m));
    for st in g.basis().to_vec() {
        let (a, b) = (st[i - 1], st[i]);
        for ip in 0..=a + b {
            let jp = a + b - ip;
            let v = if sign > 0 { r_entry(a, b, ip, jp, hw) } else { r_inverse_entry(a, b, ip, jp, hw) };
            if v.is_zero() {
                continue;
            }
            let mut t = st.clone();
            t[i - 1] = ip;
            t[i] = jp;
            g.add_entry(&st, &t, &v);
        }
    }
    g
}

/// Whether the mirror formula inverts `Ř` on every sector with `n <= 3`,
/// `m <= 3`. Computed once.
pub fn mirror_inverse_holds() -> bool {
    static OK: OnceLock<bool> = OnceLock::new();
    *OK.get_or_init(|| {
        [Highest::X, Highest::XInv].into_iter().all(|hw| {
            (2..=3usize).all(|n| {
                (0..=3u32).all(|m| {
                    (1..n).all(|i| {
                        closed_generator(n, m, i, 1, hw)
                            .compose(&closed_generator(n, m, i, -1, hw))
                            .is_identity()
                    })
                })
            })
        })
    })
}

/// `σ_i^{sign}` acting on the weight-`m` subspace of `V_∞^{⊗n}`.
pub fn generator(n: usize, m: u32, i: usize, sign: i8, hw: Highest) -> GradedMatrix {
    assert!(i >= 1 && i < n, "generator index out of range");
    if sign > 0 || mirror_inverse_holds() {
        return closed_generator(n, m, i, sign, hw);
    }
    closed_generator(n, m, i, 1, hw)
        .inverse_unit_pivot()
        .expect("Ř is a permuted triangular matrix with unit diagonal")
}

/// Matrix of the braid on the weight-`m` subspace; leftmost letter first.
pub fn tensor_action(word: &BraidWord, m: u32, hw: Highest) -> GradedMatrix {
    let n = word.strands();
    let mut acc = GradedMatrix::identity(n, m as usize, compositions(n, m));
    for &l in word.letters() {
        let g = generator(n, m, l.unsigned_abs() as usize, l.signum() as i8, hw);
        acc = g.compose(&acc);
    }
    acc
}

/// Both sides of the Kohno identity, per power of `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KohnoReport {
    /// `Tr` on the weight-`m` part of `V_∞(x^{-1})^{⊗n}`.
    pub lhs: Vec<XSeries>,
    /// `(qx)^{w/2} Σ_{k<=m} Tr_{V_{n,k}}`.
    pub rhs: Vec<XSeries>,
}

impl KohnoReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// First power of `z` where the two sides differ.
    pub fn first_mismatch(&self) -> Option<usize> {
        self.lhs.iter().zip(&self.rhs).position(|(a, b)| a != b)
    }
}

/// Compares `Σ_m Tr_{(V_∞(x^{-1})^{⊗n})_m}(β) z^m` with
/// `(qx)^{w/2} (1-z)^{-1} Σ_m Tr_{V_{n,m}}(β) z^m` up to `z^m_max`.
pub fn kohno_check(word: &BraidWord, m_max: u32) -> KohnoReport {
    let w = word.writhe();
    let lhs: Vec<XSeries> = (0..=m_max)
        .into_par_iter()
        .map(|m| tensor_action(word, m, Highest::XInv).trace())
        .collect();
    let traces = graded_trace(word, m_max, Convention::Half);
    let mut acc = XSeries::zero(UNBOUNDED);
    let rhs = traces
        .iter()
        .map(|t| {
            acc += t;
            acc.mul_monomial(1, w, w)
        })
        .collect();
    KohnoReport { lhs, rhs }
}

/// Yang-Baxter relation for `σ_i, σ_{i+1}` on the weight-`m` part of
/// `V_∞^{⊗n}`.
pub fn yang_baxter_holds(n: usize, m: u32, i: usize, hw: Highest) -> bool {
    let a = generator(n, m, i, 1, hw);
    let b = generator(n, m, i + 1, 1, hw);
    a.compose(&b).compose(&a) == b.compose(&a).compose(&b)
}
