//! Braid words, closure combinatorics and the classical Alexander oracle.

mod alexander;

use std::fmt;

use serde::Serialize;

use crate::error::BraidError;

pub use alexander::{alexander_classical, burau_delta, lawrence_delta, Alexander};

/// A word in the Artin generators, read left to right as bottom to top.
///
/// Letters are signed generator indices: `2` is `σ_2`, `-2` is `σ_2^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if letters.is_empty() {
            return Err(BraidError::Empty);
        }
        for (pos, &l) in letters.iter().enumerate() {
            if l == 0 {
                return Err(BraidError::ZeroIndex { pos: pos + 1 });
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(BraidError::IndexOutOfRange { pos: pos + 1, index: l.unsigned_abs(), strands });
            }
        }
        Ok(Self { strands, letters })
    }

    /// Parses `"1 -2 1 -2"`, `"1,1,1"` or `"n=4; 1 3"`.
    pub fn parse(text: &str) -> Result<Self, BraidError> {
        let (explicit, body) = match text.split_once(';') {
            Some((head, body)) => {
                let head = head.trim();
                let n = head
                    .strip_prefix("n=")
                    .and_then(|v| v.trim().parse::<usize>().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| BraidError::BadStrandCount(head.to_string()))?;
                (Some(n), body)
            }
            None => (None, text),
        };
        let mut letters = Vec::new();
        for (k, tok) in body.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).enumerate() {
            let pos = k + 1;
            let v: i32 = tok.parse().map_err(|_| BraidError::BadToken { pos, token: tok.to_string() })?;
            if v == 0 {
                return Err(BraidError::ZeroIndex { pos });
            }
            letters.push(v);
        }
        let inferred = 1 + letters.iter().map(|l| l.unsigned_abs() as usize).max().ok_or(BraidError::Empty)?;
        Self::new(explicit.unwrap_or(inferred), letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// The word with its letters cyclically shifted left by `k`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        let len = letters.len();
        letters.rotate_left(k % len);
        Self { strands: self.strands, letters }
    }

    /// Underlying permutation of the strands, as the image of each position.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            let i = l.unsigned_abs() as usize;
            perm.swap(i - 1, i);
        }
        perm
    }

    pub fn analyze(&self) -> BraidStats {
        let n = self.strands;
        let c = self.letters.len();
        let cr_minus = self.letters.iter().filter(|&&l| l < 0).count();
        let mut column_sign = vec![0i8; n.saturating_sub(1)];
        let mut mixed = vec![false; column_sign.len()];
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let s = l.signum() as i8;
            if column_sign[i] == 0 && !mixed[i] {
                column_sign[i] = s;
            } else if column_sign[i] != s {
                column_sign[i] = 0;
                mixed[i] = true;
            }
        }
        let is_homogeneous = column_sign.iter().all(|&s| s != 0);
        let col_minus = column_sign.iter().filter(|&&s| s < 0).count();
        let perm = self.permutation();
        let mut seen = vec![false; n];
        let mut components = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = perm[k];
            }
        }
        // Euler characteristic of the braided Seifert surface: n discs, c bands.
        let genus = (c as i64 - n as i64 + 2 - components as i64) / 2;
        BraidStats {
            n,
            c,
            writhe: self.writhe(),
            cr_minus,
            col_minus,
            column_sign,
            is_homogeneous,
            closure_components: components,
            genus,
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inferred = 1 + self.letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0);
        if inferred != self.strands {
            write!(f, "n={}; ", self.strands)?;
        }
        let parts: Vec<String> = self.letters.iter().map(i32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl std::str::FromStr for BraidWord {
    type Err = BraidError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// Combinatorial data of a braid and its closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidStats {
    pub n: usize,
    pub c: usize,
    pub writhe: i64,
    pub cr_minus: usize,
    pub col_minus: usize,
    /// Sign of each column, `0` if the column is empty or mixed.
    #[serde(rename = "columns")]
    pub column_sign: Vec<i8>,
    #[serde(rename = "homogeneous")]
    pub is_homogeneous: bool,
    #[serde(rename = "components")]
    pub closure_components: usize,
    /// Genus of the surface built from `n` discs and `c` bands.
    pub genus: i64,
}

impl BraidStats {
    pub fn is_knot(&self) -> bool {
        self.closure_components == 1
    }

    /// `λ = g - (w - (n-1))/2 - col_-`, which for knots equals `cr_- - col_-`.
    pub fn lambda(&self) -> i64 {
        self.cr_minus as i64 - self.col_minus as i64
    }

    pub fn col_plus(&self) -> usize {
        self.column_sign.len() - self.col_minus
    }

    /// Fails unless the word is homogeneous and closes to a knot.
    pub fn require_homogeneous_knot(&self) -> Result<(), BraidError> {
        if !self.is_homogeneous {
            let bad = self.column_sign.iter().position(|&s| s == 0).unwrap_or(0) + 1;
            return Err(BraidError::NotHomogeneous(format!("column {bad} is empty or has mixed signs")));
        }
        if !self.is_knot() {
            return Err(BraidError::NotAKnot(self.closure_components));
        }
        Ok(())
    }

    /// Flat `key: value` block.
    pub fn render(&self) -> String {
        let cols: Vec<String> = self.column_sign.iter().map(|s| format!("{s:+}")).collect();
        format!(
            "n: {}\nc: {}\nwrithe: {}\ncr_minus: {}\ncol_minus: {}\ncolumns: {}\nhomogeneous: {}\ncomponents: {}\ngenus: {}\n",
            self.n,
            self.c,
            self.writhe,
            self.cr_minus,
            self.col_minus,
            cols.join(" "),
            self.is_homogeneous,
            self.closure_components,
            self.genus
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let b = BraidWord::parse("1 1 1").unwrap();
        assert_eq!((b.strands(), b.letters()), (2, &[1, 1, 1][..]));
        let b = BraidWord::parse("1,-2, 1 -2").unwrap();
        assert_eq!((b.strands(), b.letters()), (3, &[1, -2, 1, -2][..]));
        let b = BraidWord::parse("n=4; 1 3").unwrap();
        assert_eq!(b.strands(), 4);
        assert_eq!(b.to_string(), "1 3");
        let b = BraidWord::parse("n=5; 1 3").unwrap();
        assert_eq!(b.to_string(), "n=5; 1 3");
    }

    #[test]
    fn parse_errors_carry_position() {
        assert_eq!(BraidWord::parse("  "), Err(BraidError::Empty));
        assert_eq!(BraidWord::parse("1 0 1"), Err(BraidError::ZeroIndex { pos: 2 }));
        assert_eq!(
            BraidWord::parse("1 a"),
            Err(BraidError::BadToken { pos: 2, token: "a".into() })
        );
        assert_eq!(
            BraidWord::parse("n=2; 1 2"),
            Err(BraidError::IndexOutOfRange { pos: 2, index: 2, strands: 2 })
        );
        assert!(matches!(BraidWord::parse("k=2; 1"), Err(BraidError::BadStrandCount(_))));
    }

    #[test]
    fn trefoil_and_figure_eight_stats() {
        let s = BraidWord::parse("1 1 1").unwrap().analyze();
        assert_eq!((s.writhe, s.cr_minus, s.col_minus, s.genus), (3, 0, 0, 1));
        assert!(s.is_homogeneous && s.is_knot());
        let s = BraidWord::parse("1 -2 1 -2").unwrap().analyze();
        assert_eq!((s.writhe, s.cr_minus, s.col_minus, s.genus), (0, 2, 1, 1));
        assert_eq!(s.column_sign, vec![1, -1]);
        assert!(s.is_homogeneous && s.is_knot());
    }

    #[test]
    fn mixed_and_empty_columns() {
        let s = BraidWord::parse("1 -1").unwrap().analyze();
        assert!(!s.is_homogeneous);
        assert_eq!(s.closure_components, 2);
        let s = BraidWord::parse("n=4; 1 2").unwrap().analyze();
        assert!(!s.is_homogeneous);
        assert!(s.require_homogeneous_knot().is_err());
    }

    #[test]
    fn two_component_links_are_detected() {
        for w in ["1 -2 -2 -2 1", "1 1 -2 1 -2", "1 1"] {
            assert!(!BraidWord::parse(w).unwrap().analyze().is_knot(), "{w}");
        }
    }
}
