//! Sparse matrices over two-variable Laurent data, indexed by label tuples.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::ring::{QLaurent, XSeries, UNBOUNDED};

/// A label tuple naming a basis vector.
pub type State = Vec<u32>;

/// Sparse square matrix acting on column vectors, with basis vectors named
/// by label tuples in lexicographic order.
///
/// Entries are exact [`XSeries`], i.e. Laurent polynomials in `q^{1/2}` and
/// `x^{1/2}`. `n` and `m` record the strand count and weight sector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    pub n: usize,
    pub m: usize,
    basis: Vec<State>,
    index: HashMap<State, usize>,
    /// `cols[j]` maps a row index to the entry in column `j`.
    cols: Vec<BTreeMap<usize, XSeries>>,
}

impl GradedMatrix {
    pub fn zero(n: usize, m: usize, mut basis: Vec<State>) -> Self {
        basis.sort();
        basis.dedup();
        let index = basis.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let cols = vec![BTreeMap::new(); basis.len()];
        Self { n, m, basis, index, cols }
    }

    pub fn identity(n: usize, m: usize, basis: Vec<State>) -> Self {
        let mut out = Self::zero(n, m, basis);
        for j in 0..out.dim() {
            out.cols[j].insert(j, XSeries::one(UNBOUNDED));
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[State] {
        &self.basis
    }

    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Adds `v` to the entry mapping basis vector `from` to `to`.
    pub fn add_entry(&mut self, from: &[u32], to: &[u32], v: &XSeries) {
        let (Some(j), Some(i)) = (self.index_of(from), self.index_of(to)) else {
            panic!("state outside the matrix basis: {from:?} -> {to:?}");
        };
        self.add_at(i, j, v);
    }

    fn add_at(&mut self, i: usize, j: usize, v: &XSeries) {
        if v.is_zero() {
            return;
        }
        let col = &mut self.cols[j];
        let slot = col.entry(i).or_insert_with(|| XSeries::zero(UNBOUNDED));
        *slot += v;
        if slot.is_zero() {
            col.remove(&i);
        }
    }

    pub fn entry(&self, from: &[u32], to: &[u32]) -> XSeries {
        match (self.index_of(from), self.index_of(to)) {
            (Some(j), Some(i)) => self.cols[j].get(&i).cloned().unwrap_or_else(|| XSeries::zero(UNBOUNDED)),
            _ => XSeries::zero(UNBOUNDED),
        }
    }

    /// Nonzero entries as `(from, to, value)`, sorted by `(from, to)`.
    pub fn entries(&self) -> impl Iterator<Item = (&State, &State, &XSeries)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(move |(j, col)| col.iter().map(move |(i, v)| (&self.basis[j], &self.basis[*i], v)))
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    /// `self * rhs`: apply `rhs` first, then `self`.
    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.basis, rhs.basis, "basis mismatch");
        let mut out = Self::zero(self.n, self.m, self.basis.clone());
        for (j, rcol) in rhs.cols.iter().enumerate() {
            for (k, b) in rcol {
                for (i, a) in &self.cols[*k] {
                    out.add_at(*i, j, &(a * b));
                }
            }
        }
        out
    }

    pub fn trace(&self) -> XSeries {
        let mut acc = XSeries::zero(UNBOUNDED);
        for (j, col) in self.cols.iter().enumerate() {
            if let Some(v) = col.get(&j) {
                acc += v;
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(j, col)| col.len() == 1 && col.get(&j).is_some_and(XSeries::is_one))
    }

    pub fn map_entries(&self, f: impl Fn(&XSeries) -> XSeries) -> Self {
        let mut out = Self::zero(self.n, self.m, self.basis.clone());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                out.add_at(*i, j, &f(v));
            }
        }
        out
    }

    /// Inverse by Gauss-Jordan elimination, using only pivots that are unit
    /// monomials `±q^a x^b`. Returns `None` if no such pivot sequence exists.
    pub fn inverse_unit_pivot(&self) -> Option<Self> {
        let d = self.dim();
        // Dense row-major copies of self and the identity.
        let zero = XSeries::zero(UNBOUNDED);
        let mut a: Vec<Vec<XSeries>> = vec![vec![zero.clone(); d]; d];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                a[*i][j] = v.clone();
            }
        }
        let mut inv: Vec<Vec<XSeries>> = (0..d)
            .map(|i| (0..d).map(|j| if i == j { XSeries::one(UNBOUNDED) } else { zero.clone() }).collect())
            .collect();
        let mut used = vec![false; d];
        let mut pivot_row_of_col = vec![0usize; d];
        for c in 0..d {
            let r = (0..d).find(|&r| !used[r] && unit_inverse(&a[r][c]).is_some())?;
            used[r] = true;
            pivot_row_of_col[c] = r;
            let pinv = unit_inverse(&a[r][c])?;
            for j in 0..d {
                a[r][j] = &a[r][j] * &pinv;
                inv[r][j] = &inv[r][j] * &pinv;
            }
            for rr in 0..d {
                if rr == r || a[rr][c].is_zero() {
                    continue;
                }
                let f = a[rr][c].clone();
                for j in 0..d {
                    if !a[r][j].is_zero() {
                        a[rr][j] = &a[rr][j] - &(&f * &a[r][j]);
                    }
                    if !inv[r][j].is_zero() {
                        inv[rr][j] = &inv[rr][j] - &(&f * &inv[r][j]);
                    }
                }
            }
        }
        let mut out = Self::zero(self.n, self.m, self.basis.clone());
        for c in 0..d {
            let r = pivot_row_of_col[c];
            for (j, v) in inv[r].iter().enumerate() {
                out.add_at(c, j, v);
            }
        }
        Some(out)
    }

    /// One line per nonzero entry, `(<from>) -> (<to>) : <value>`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (from, to, v) in self.entries() {
            writeln!(out, "({}) -> ({}) : {}", join(from), join(to), v).unwrap();
        }
        out
    }
}

fn join(s: &[u32]) -> String {
    s.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn unit_inverse(v: &XSeries) -> Option<XSeries> {
    if v.len() != 1 {
        return None;
    }
    let (e, c) = v.terms().next()?;
    let (sign, a) = c.as_unit()?;
    Some(XSeries::exact([(-e, QLaurent::monomial(sign as i64, -a))]))
}

/// Determinant of a dense square matrix over a Laurent polynomial ring, by
/// fraction-free (Bareiss) elimination with exact division.
pub fn det_laurent(mut a: Vec<Vec<QLaurent>>) -> QLaurent {
    let d = a.len();
    if d == 0 {
        return QLaurent::one();
    }
    let mut sign = 1i64;
    let mut prev = QLaurent::one();
    for k in 0..d - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..d).find(|&r| !a[r][k].is_zero()) else {
                return QLaurent::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..d {
            for j in k + 1..d {
                let t = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            a[i][k] = QLaurent::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[d - 1][d - 1].clone();
    if sign < 0 { -det } else { det }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(k: i64) -> QLaurent {
        QLaurent::from(k)
    }

    #[test]
    fn bareiss_integer_determinant() {
        let m = vec![vec![c(0), c(2), c(1)], vec![c(1), c(0), c(3)], vec![c(4), c(1), c(0)]];
        // 0*(0-3) - 2*(0-12) + 1*(1-0) = 25
        assert_eq!(det_laurent(m), c(25));
    }

    #[test]
    fn bareiss_polynomial_determinant() {
        let x = QLaurent::monomial(1, 2);
        let m = vec![vec![&c(1) - &x, x.clone()], vec![c(1), &c(1) + &x]];
        // (1-x)(1+x) - x = 1 - x - x^2
        assert_eq!(det_laurent(m), QLaurent::from_terms([(0, 1), (2, -1), (4, -1)]));
    }

    #[test]
    fn unit_pivot_inverse_roundtrip() {
        let basis = vec![vec![0, 1], vec![1, 0]];
        let mut m = GradedMatrix::zero(3, 1, basis);
        let x = XSeries::exact([(1, QLaurent::monomial(-1, 3))]);
        let y = XSeries::exact([(0, QLaurent::from_terms([(0, 1), (2, 1)]))]);
        m.add_entry(&[0, 1], &[1, 0], &x);
        m.add_entry(&[1, 0], &[0, 1], &XSeries::one(UNBOUNDED));
        m.add_entry(&[1, 0], &[1, 0], &y);
        let inv = m.inverse_unit_pivot().unwrap();
        assert!(m.compose(&inv).is_identity());
        assert!(inv.compose(&m).is_identity());
    }
}
