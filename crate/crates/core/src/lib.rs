//! Exact computation of flow-loop counts and `Ẑ` series for closures of
//! homogeneous braids.
//!
//! Everything is integer arithmetic over `Z[q^{±1/2}]` and truncated series
//! in `x^{1/2}`; there is no floating point anywhere.

pub mod braid;
pub mod error;
pub mod lawrence;
pub mod matrix;
pub mod ring;
pub mod template;
pub mod verify;
pub mod verma;
pub mod zhat;

pub use error::{Error, Result};
