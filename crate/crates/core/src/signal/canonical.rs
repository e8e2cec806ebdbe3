use num_traits::Zero;

use super::{periodic_restrict, Signal, TimeDomain};
use crate::sets::{Interval, IntervalSet, Rational};

fn unit() -> Rational {
    Rational::from_integer(1.into())
}

/// Whether the `period`-periodic set generated by `pattern` is invariant
/// under translation by `d`.
fn invariant_under(pattern: &IntervalSet, period: &Rational, d: &Rational) -> bool {
    let window = Interval::closed_open(Rational::zero(), period.clone());
    periodic_restrict(pattern, d, period, &window) == *pattern
}

/// Smallest period of the periodic set generated by `pattern`, together
/// with the pattern restricted to it. Constants get period 1.
fn minimal_period(pattern: &IntervalSet, period: &Rational) -> (Rational, IntervalSet) {
    let one_period = Interval::closed_open(Rational::zero(), period.clone());
    if pattern.is_empty() {
        return (unit(), IntervalSet::empty());
    }
    if pattern.components() == [one_period] {
        return (
            unit(),
            IntervalSet::from_interval(Interval::closed_open(Rational::zero(), unit())),
        );
    }
    // a pattern that repeats m times has at least m components
    let max_divisor = pattern.len() as i64 + 1;
    for m in (2..=max_divisor).rev() {
        let q = period / Rational::from_integer(m.into());
        if invariant_under(pattern, period, &q) {
            let reduced = pattern.restrict(&Interval::closed_open(Rational::zero(), q.clone()));
            return (q, reduced);
        }
    }
    (period.clone(), pattern.clone())
}

impl Signal {
    /// Canonical representative: minimal period, then minimal transient.
    /// Two signals denote the same set iff their canonical forms are equal.
    pub fn canonicalize(&self) -> Signal {
        let (period, pattern) = minimal_period(&self.pattern, &self.period);
        if self.domain == TimeDomain::FullLine || self.transient.is_zero() {
            return Signal {
                domain: self.domain,
                transient: Rational::zero(),
                prefix: IntervalSet::empty(),
                period,
                pattern,
            };
        }
        let tail_shape = Signal {
            domain: self.domain,
            transient: self.transient.clone(),
            prefix: self.prefix.clone(),
            period: period.clone(),
            pattern: pattern.clone(),
        };
        let start = earliest_tail_start(&tail_shape);
        tail_shape.reexpress(&start, &period)
    }
}

/// The canonical transient end. It is the supremum of the points where the
/// prefix deviates from the backward extension of the tail. When that
/// supremum is itself a deviation no least transient exists, and the first
/// tail boundary after it is used instead.
fn earliest_tail_start(s: &Signal) -> Rational {
    let head = Interval::closed_open(Rational::zero(), s.transient.clone());
    let extended = periodic_restrict(&s.pattern, &s.transient, &s.period, &head);
    let deviation = s.prefix.symmetric_difference(&extended);
    let Some(last) = deviation.components().last() else {
        return Rational::zero();
    };
    let sup = last.upper().expect("deviation lies inside the transient").clone();
    if !last.upper_closed() {
        return sup;
    }
    let bound = &sup + &s.period;
    let look = Interval::closed(&sup - &s.period, &bound + &s.period);
    periodic_restrict(&s.pattern, &s.transient, &s.period, &look)
        .endpoints()
        .into_iter()
        .find(|e| e > &sup && e <= &bound)
        .unwrap_or(bound)
}
