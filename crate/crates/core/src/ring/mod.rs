//! Exact coefficient ring: Laurent polynomials in `q^{1/2}`, truncated
//! series in `x^{1/2}`, and q-combinatorics.

mod identities;
mod laurent;
mod qcomb;
pub mod render;
mod series;

use std::fmt;

pub use identities::{period_doubling_identity, saddle_node_identity};
pub use laurent::QLaurent;
pub use qcomb::{pochhammer, qbinom, qtrinom, QBinomTable};
pub use series::{XSeries, UNBOUNDED};

/// A half-integer framing `f`, stored as `2f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Framing(i64);

impl Framing {
    pub fn from_half_units(h: i64) -> Self {
        Self(h)
    }

    pub fn integer(f: i64) -> Self {
        Self(2 * f)
    }

    pub fn half_units(self) -> i64 {
        self.0
    }
}

impl fmt::Display for Framing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render::fmt_half(self.0))
    }
}
