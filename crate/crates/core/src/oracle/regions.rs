use num_bigint::BigInt;

use crate::sets::{midpoint, Interval, Rational};
use crate::signal::{Signal, SignalError};

/// A cell of a joint refinement: a single point or an open interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Piece {
    Point(Rational),
    Gap(Rational, Rational),
}

impl Piece {
    pub fn representative(&self) -> Rational {
        match self {
            Piece::Point(x) => x.clone(),
            Piece::Gap(a, b) => midpoint(a, b),
        }
    }

    pub fn is_point(&self) -> bool {
        matches!(self, Piece::Point(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub piece: Piece,
    /// Truth value of each input signal on the region.
    pub values: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionDecomposition {
    pub window: Interval,
    pub regions: Vec<Region>,
}

/// Endpoints of every signal near `[lo, hi]`, translated by each integer in
/// `-depth..=depth`, that fall strictly inside `(lo, hi)`.
pub(crate) fn cut_points(
    signals: &[&Signal],
    lo: &Rational,
    hi: &Rational,
    depth: usize,
) -> Vec<Rational> {
    let reach = Rational::from_integer(BigInt::from(depth));
    let around = Interval::closed(lo - &reach, hi + &reach);
    let mut cuts = Vec::new();
    for s in signals {
        for e in s.restrict(&around).endpoints() {
            for j in -(depth as i64)..=(depth as i64) {
                let c = &e + Rational::from_integer(BigInt::from(j));
                if &c > lo && &c < hi {
                    cuts.push(c);
                }
            }
        }
    }
    cuts.sort();
    cuts.dedup();
    cuts
}

/// Splits a bounded window into points and open gaps at `cuts`, in
/// ascending order. Closed window ends become point cells.
pub(crate) fn pieces(window: &Interval, cuts: &[Rational]) -> Vec<Piece> {
    let lo = window.lower().expect("bounded window").clone();
    let hi = window.upper().expect("bounded window").clone();
    let mut out = Vec::with_capacity(2 * cuts.len() + 3);
    if window.lower_closed() {
        out.push(Piece::Point(lo.clone()));
    }
    if lo == hi {
        return out;
    }
    let mut left = lo;
    for c in cuts {
        out.push(Piece::Gap(left, c.clone()));
        out.push(Piece::Point(c.clone()));
        left = c.clone();
    }
    out.push(Piece::Gap(left, hi.clone()));
    if window.upper_closed() {
        out.push(Piece::Point(hi));
    }
    out
}

/// The joint refinement of `signals` over `[a, b]`.
pub fn region_decomposition(
    signals: &[Signal],
    a: &Rational,
    b: &Rational,
) -> Result<RegionDecomposition, SignalError> {
    if a >= b {
        return Err(SignalError::Window(format!("[{a},{b}] has no interior")));
    }
    for s in signals {
        if !s.domain().contains(a) {
            return Err(SignalError::OutsideDomain(a.clone()));
        }
    }
    let refs: Vec<&Signal> = signals.iter().collect();
    let window = Interval::closed(a.clone(), b.clone());
    let cuts = cut_points(&refs, a, b, 0);
    let regions = pieces(&window, &cuts)
        .into_iter()
        .map(|piece| {
            let x = piece.representative();
            let values = signals.iter().map(|s| s.holds(&x)).collect();
            Region { piece, values }
        })
        .collect();
    Ok(RegionDecomposition { window, regions })
}
