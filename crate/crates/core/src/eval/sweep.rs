use std::collections::BTreeSet;

use num_traits::Zero;

use crate::sets::{midpoint, Interval, IntervalSet, Rational};
use crate::signal::{Signal, TimeDomain};

/// Where an operator's output is computed: the fundamental window
/// `[0, transient + period)`, whose tail part `[transient, transient + period)`
/// becomes the repeating pattern.
pub(super) struct Frame {
    pub domain: TimeDomain,
    pub transient: Rational,
    pub period: Rational,
}

impl Frame {
    pub fn end(&self) -> Rational {
        &self.transient + &self.period
    }

    /// Assembles an output signal by deciding the operator at every critical
    /// point and at one midpoint of every gap between them. Critical points
    /// are the operand endpoints translated by each of `shifts`; the output
    /// must be constant between consecutive critical points.
    pub fn sweep(
        &self,
        operands: &[&IntervalSet],
        shifts: &[Rational],
        decide: impl Fn(&Rational) -> bool,
    ) -> Signal {
        let zero = Rational::zero();
        let end = self.end();
        let mut critical: BTreeSet<Rational> = BTreeSet::new();
        critical.insert(zero.clone());
        critical.insert(self.transient.clone());
        for set in operands {
            for e in set.endpoints() {
                for s in shifts {
                    let c = &e + s;
                    if c >= zero && c < end {
                        critical.insert(c);
                    }
                }
            }
        }
        let critical: Vec<Rational> = critical.into_iter().collect();
        let mut pieces = Vec::new();
        for (i, c) in critical.iter().enumerate() {
            if decide(c) {
                pieces.push(Interval::point(c.clone()));
            }
            let next = critical.get(i + 1).unwrap_or(&end);
            if decide(&midpoint(c, next)) {
                pieces.push(Interval::open(c.clone(), next.clone()));
            }
        }
        let truth = IntervalSet::normalize(pieces);
        let prefix = if self.transient.is_zero() {
            IntervalSet::empty()
        } else {
            truth.restrict(&Interval::closed_open(zero, self.transient.clone()))
        };
        let pattern = truth
            .restrict(&Interval::closed_open(self.transient.clone(), end))
            .shift(&-&self.transient);
        Signal::new(
            self.domain,
            self.transient.clone(),
            prefix,
            self.period.clone(),
            pattern,
        )
        .expect("sweep output respects the signal invariants")
        .canonicalize()
    }
}
