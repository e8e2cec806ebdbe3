//! Boolean signals over dense time that are periodic (full line) or
//! eventually periodic (half-line).
//!
//! A signal is stored as a transient prefix on `[0, T)` followed by a
//! pattern on `[0, p)` that repeats from `T` on. On the full line the
//! transient is always empty and the pattern is anchored at 0.

mod canonical;
mod file;

pub use file::parse_signal_file;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::sets::{floor_div, lcm, Interval, IntervalSet, Rational, SetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignalError {
    #[error("signals live on different time domains")]
    DomainMismatch,
    #[error("time {0} lies outside the half-line")]
    OutsideDomain(Rational),
    #[error("invalid signal: {0}")]
    Invalid(String),
    #[error("invalid window: {0}")]
    Window(String),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error("signal file line {line}: {msg}")]
    File { line: usize, msg: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TimeDomain {
    /// All reals.
    FullLine,
    /// The non-negative reals.
    HalfLine,
}

impl TimeDomain {
    pub fn contains(&self, x: &Rational) -> bool {
        match self {
            TimeDomain::FullLine => true,
            TimeDomain::HalfLine => !x.is_negative(),
        }
    }

    /// The domain itself as an interval.
    pub fn interval(&self) -> Interval {
        match self {
            TimeDomain::FullLine => Interval::full(),
            TimeDomain::HalfLine => Interval::at_least(Rational::zero()),
        }
    }

    pub fn keyword(&self) -> &'static str {
        match self {
            TimeDomain::FullLine => "line",
            TimeDomain::HalfLine => "halfline",
        }
    }
}

impl fmt::Display for TimeDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoolOp {
    Not,
    And,
    Or,
}

/// Which of the four trivial predicates a signal coincides with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Triviality {
    True,
    False,
    P,
    NotP,
    Nontrivial,
}

impl Triviality {
    pub fn is_trivial(&self) -> bool {
        *self != Triviality::Nontrivial
    }
}

impl fmt::Display for Triviality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Triviality::True => "True",
            Triviality::False => "False",
            Triviality::P => "P",
            Triviality::NotP => "NotP",
            Triviality::Nontrivial => "None",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signal {
    domain: TimeDomain,
    transient: Rational,
    prefix: IntervalSet,
    period: Rational,
    pattern: IntervalSet,
}

/// `{x ∈ window : ((x − anchor) mod period) ∈ pattern}` for a bounded window.
pub(crate) fn periodic_restrict(
    pattern: &IntervalSet,
    anchor: &Rational,
    period: &Rational,
    window: &Interval,
) -> IntervalSet {
    let (Some(lo), Some(hi)) = (window.lower(), window.upper()) else {
        panic!("periodic restriction needs a bounded window");
    };
    let first = floor_div(&(lo - anchor), period);
    let last = floor_div(&(hi - anchor), period);
    let mut pieces = Vec::new();
    let mut k = first;
    while k <= last {
        let offset = anchor + Rational::from_integer(k.clone()) * period;
        for c in pattern.components() {
            if let Some(part) = c.shift(&offset).intersect(window) {
                pieces.push(part);
            }
        }
        k += BigInt::from(1);
    }
    IntervalSet::normalize(pieces)
}

impl Signal {
    pub fn new(
        domain: TimeDomain,
        transient: Rational,
        prefix: IntervalSet,
        period: Rational,
        pattern: IntervalSet,
    ) -> Result<Self, SignalError> {
        if !period.is_positive() {
            return Err(SignalError::Invalid(format!("period {period} must be positive")));
        }
        if transient.is_negative() {
            return Err(SignalError::Invalid(format!(
                "transient {transient} must be non-negative"
            )));
        }
        if domain == TimeDomain::FullLine && (!transient.is_zero() || !prefix.is_empty()) {
            return Err(SignalError::Invalid(
                "full-line signals are purely periodic".into(),
            ));
        }
        if !prefix.is_empty() {
            let span = IntervalSet::from_interval(Interval::closed_open(
                Rational::zero(),
                transient.clone(),
            ));
            if !prefix.is_subset(&span) {
                return Err(SignalError::Invalid(format!(
                    "prefix {prefix} escapes [0,{transient})"
                )));
            }
        }
        if !pattern.is_empty() {
            let span = IntervalSet::from_interval(Interval::closed_open(
                Rational::zero(),
                period.clone(),
            ));
            if !pattern.is_subset(&span) {
                return Err(SignalError::Invalid(format!(
                    "pattern {pattern} escapes [0,{period})"
                )));
            }
        }
        Ok(Signal {
            domain,
            transient,
            prefix,
            period,
            pattern,
        })
    }

    /// A purely periodic signal anchored at 0.
    pub fn periodic(
        domain: TimeDomain,
        period: Rational,
        pattern: IntervalSet,
    ) -> Result<Self, SignalError> {
        Signal::new(domain, Rational::zero(), IntervalSet::empty(), period, pattern)
    }

    pub fn constant(domain: TimeDomain, value: bool) -> Signal {
        let one = Rational::from_integer(1.into());
        let pattern = if value {
            IntervalSet::from_interval(Interval::closed_open(Rational::zero(), one.clone()))
        } else {
            IntervalSet::empty()
        };
        Signal {
            domain,
            transient: Rational::zero(),
            prefix: IntervalSet::empty(),
            period: one,
            pattern,
        }
    }

    pub fn domain(&self) -> TimeDomain {
        self.domain
    }

    pub fn transient(&self) -> &Rational {
        &self.transient
    }

    pub fn prefix(&self) -> &IntervalSet {
        &self.prefix
    }

    pub fn period(&self) -> &Rational {
        &self.period
    }

    pub fn pattern(&self) -> &IntervalSet {
        &self.pattern
    }

    pub fn membership(&self, x: &Rational) -> Result<bool, SignalError> {
        if !self.domain.contains(x) {
            return Err(SignalError::OutsideDomain(x.clone()));
        }
        Ok(self.holds(x))
    }

    /// Membership without the domain check.
    pub(crate) fn holds(&self, x: &Rational) -> bool {
        if self.domain == TimeDomain::HalfLine && x < &self.transient {
            return self.prefix.contains(x);
        }
        let offset = x - &self.transient;
        let k = floor_div(&offset, &self.period);
        let reduced = offset - Rational::from_integer(k) * &self.period;
        self.pattern.contains(&reduced)
    }

    /// The exact point set `self ∩ window`. The window must be bounded;
    /// on the half-line it is clipped to `[0, ∞)`.
    pub fn restrict(&self, window: &Interval) -> IntervalSet {
        assert!(window.is_bounded(), "signal restriction needs a bounded window");
        let Some(window) = window.intersect(&self.domain.interval()) else {
            return IntervalSet::empty();
        };
        if self.domain == TimeDomain::FullLine {
            return periodic_restrict(&self.pattern, &self.transient, &self.period, &window);
        }
        let mut out = self.prefix.restrict(&window);
        if let Some(tail_window) = window.intersect(&Interval::at_least(self.transient.clone())) {
            let tail = periodic_restrict(&self.pattern, &self.transient, &self.period, &tail_window);
            out = out.union(&tail);
        }
        out
    }

    /// `self ∩ [a,b]`.
    pub fn slice(&self, a: &Rational, b: &Rational) -> Result<IntervalSet, SignalError> {
        if a > b {
            return Err(SignalError::Window(format!("empty window [{a},{b}]")));
        }
        if !self.domain.contains(a) {
            return Err(SignalError::OutsideDomain(a.clone()));
        }
        Ok(self.restrict(&Interval::closed(a.clone(), b.clone())))
    }

    /// Re-expresses the same set with a new transient end and period. The
    /// set must be `period`-periodic from `transient` on, which holds for
    /// any later transient and any multiple of the current period.
    pub fn reexpress(&self, transient: &Rational, period: &Rational) -> Signal {
        let transient = match self.domain {
            TimeDomain::FullLine => Rational::zero(),
            TimeDomain::HalfLine => transient.clone(),
        };
        let prefix = if transient.is_zero() {
            IntervalSet::empty()
        } else {
            self.restrict(&Interval::closed_open(Rational::zero(), transient.clone()))
        };
        let pattern = self
            .restrict(&Interval::closed_open(transient.clone(), &transient + period))
            .shift(&-&transient);
        Signal {
            domain: self.domain,
            transient,
            prefix,
            period: period.clone(),
            pattern,
        }
    }

    /// Equivalent representations sharing one period and one transient end.
    pub fn align(a: &Signal, b: &Signal) -> Result<(Signal, Signal), SignalError> {
        let mut both = Signal::align_all(&[a.clone(), b.clone()])?;
        let b = both.pop().unwrap();
        let a = both.pop().unwrap();
        Ok((a, b))
    }

    pub fn align_all(signals: &[Signal]) -> Result<Vec<Signal>, SignalError> {
        let Some(first) = signals.first() else {
            return Ok(Vec::new());
        };
        if signals.iter().any(|s| s.domain != first.domain) {
            return Err(SignalError::DomainMismatch);
        }
        let mut period = first.period.clone();
        let mut transient = first.transient.clone();
        for s in &signals[1..] {
            period = lcm(&period, &s.period);
            if s.transient > transient {
                transient = s.transient.clone();
            }
        }
        Ok(signals
            .iter()
            .map(|s| {
                if s.period == period && s.transient == transient {
                    s.clone()
                } else {
                    s.reexpress(&transient, &period)
                }
            })
            .collect())
    }

    pub fn not(&self) -> Signal {
        let prefix = if self.transient.is_zero() {
            IntervalSet::empty()
        } else {
            self.prefix.complement().restrict(&Interval::closed_open(
                Rational::zero(),
                self.transient.clone(),
            ))
        };
        let pattern = self
            .pattern
            .complement()
            .restrict(&Interval::closed_open(Rational::zero(), self.period.clone()));
        Signal {
            domain: self.domain,
            transient: self.transient.clone(),
            prefix,
            period: self.period.clone(),
            pattern,
        }
    }

    fn zip_with(
        &self,
        other: &Signal,
        f: impl Fn(&IntervalSet, &IntervalSet) -> IntervalSet,
    ) -> Result<Signal, SignalError> {
        let (a, b) = Signal::align(self, other)?;
        Ok(Signal {
            domain: a.domain,
            prefix: f(&a.prefix, &b.prefix),
            pattern: f(&a.pattern, &b.pattern),
            transient: a.transient,
            period: a.period,
        })
    }

    pub fn and(&self, other: &Signal) -> Result<Signal, SignalError> {
        self.zip_with(other, IntervalSet::intersection)
    }

    pub fn or(&self, other: &Signal) -> Result<Signal, SignalError> {
        self.zip_with(other, IntervalSet::union)
    }

    /// Pointwise boolean combination. `Not` ignores `b`.
    pub fn combine(op: BoolOp, a: &Signal, b: Option<&Signal>) -> Result<Signal, SignalError> {
        let missing = || SignalError::Invalid("binary combination needs two operands".into());
        match op {
            BoolOp::Not => Ok(a.not()),
            BoolOp::And => a.and(b.ok_or_else(missing)?),
            BoolOp::Or => a.or(b.ok_or_else(missing)?),
        }
    }

    /// Translates a full-line signal by `d`.
    pub fn shift(&self, d: &Rational) -> Result<Signal, SignalError> {
        if self.domain != TimeDomain::FullLine {
            return Err(SignalError::Invalid(
                "only full-line signals can be translated".into(),
            ));
        }
        let pattern = periodic_restrict(
            &self.pattern,
            d,
            &self.period,
            &Interval::closed_open(Rational::zero(), self.period.clone()),
        );
        Ok(Signal {
            pattern,
            ..self.clone()
        })
    }

    /// Exact (or, with `eventually`, tail) equality of the denoted sets.
    pub fn equal(a: &Signal, b: &Signal, eventually: bool) -> Result<bool, SignalError> {
        if a.domain != b.domain {
            return Err(SignalError::DomainMismatch);
        }
        if eventually && a.domain == TimeDomain::HalfLine {
            let (a, b) = Signal::align(a, b)?;
            return Ok(a.pattern == b.pattern);
        }
        Ok(a.canonicalize() == b.canonicalize())
    }

    pub fn is_subset(&self, other: &Signal) -> Result<bool, SignalError> {
        let (a, b) = Signal::align(self, other)?;
        Ok(a.prefix.is_subset(&b.prefix) && a.pattern.is_subset(&b.pattern))
    }

    pub fn is_empty(&self) -> bool {
        self.prefix.is_empty() && self.pattern.is_empty()
    }

    pub fn is_full(&self) -> bool {
        let c = self.canonicalize();
        c.transient.is_zero() && c.pattern.len() == 1 && c.pattern.components()[0]
            == Interval::closed_open(Rational::zero(), c.period.clone())
    }

    /// Which trivial predicate among True, False, `p_atom` and its negation
    /// this signal equals; precedence True > False > P > NotP.
    pub fn classify_trivial(
        &self,
        p_atom: &Signal,
        eventually: bool,
    ) -> Result<Triviality, SignalError> {
        let candidates = [
            (Triviality::True, Signal::constant(self.domain, true)),
            (Triviality::False, Signal::constant(self.domain, false)),
            (Triviality::P, p_atom.clone()),
            (Triviality::NotP, p_atom.not()),
        ];
        for (class, candidate) in candidates {
            if Signal::equal(self, &candidate, eventually)? {
                return Ok(class);
            }
        }
        Ok(Triviality::Nontrivial)
    }

    /// The file-format text of the canonical form.
    pub fn to_file_string(&self) -> String {
        file::emit(&self.canonicalize())
    }
}

impl fmt::Display for Signal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.domain {
            TimeDomain::FullLine => write!(
                f,
                "line: {} repeated every {}",
                self.pattern, self.period
            ),
            TimeDomain::HalfLine if self.transient.is_zero() => write!(
                f,
                "halfline: {} repeated every {} from 0",
                self.pattern, self.period
            ),
            TimeDomain::HalfLine => write!(
                f,
                "halfline: {} on [0,{}), then {} repeated every {} from {}",
                self.prefix, self.transient, self.pattern, self.period, self.transient
            ),
        }
    }
}

#[cfg(test)]
mod tests;
