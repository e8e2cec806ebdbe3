//! Exact rational arithmetic and normalized interval sets.
//!
//! Every time coordinate in the engine is a [`Rational`]. Truth sets are
//! [`IntervalSet`]s: finite unions of intervals in a unique normal form, so
//! two sets denote the same points iff they compare equal.

mod interval;
mod rational;
mod text;

pub use interval::{Interval, IntervalSet};
pub use rational::{ceil_div, floor_div, lcm, midpoint, rat, Rational};
pub use text::{parse_interval, parse_interval_list, parse_rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("malformed interval: {0}")]
    MalformedInterval(String),
    #[error("invalid rational `{0}`")]
    InvalidRational(String),
    #[error("invalid interval syntax at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}
