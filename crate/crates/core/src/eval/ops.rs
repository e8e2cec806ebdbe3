use num_traits::Zero;

use super::sweep::Frame;
use super::EvalError;
use crate::sets::{midpoint, rat, Interval, IntervalSet, Rational};
use crate::signal::{Signal, TimeDomain};

fn one() -> Rational {
    rat(1, 1)
}

/// Operand slice window and output frame for an operator that looks
/// `ahead` time units into the future and `behind` into the past. `lag` is
/// how much later than the operand's transient the output settles.
fn frame_for(
    s: &Signal,
    ahead: &Rational,
    behind: &Rational,
    lag: &Rational,
) -> (Frame, Interval) {
    let period = s.period().clone();
    match s.domain() {
        TimeDomain::FullLine => (
            Frame {
                domain: TimeDomain::FullLine,
                transient: Rational::zero(),
                period: period.clone(),
            },
            Interval::closed(-behind - &period, &period + ahead + &period),
        ),
        TimeDomain::HalfLine => {
            let transient = s.transient() + lag;
            let hi = &transient + &period + ahead + &period;
            (
                Frame {
                    domain: TimeDomain::HalfLine,
                    transient,
                    period,
                },
                Interval::closed(Rational::zero(), hi),
            )
        }
    }
}

fn future_window(t: &Rational) -> Interval {
    Interval::open(t.clone(), t + one())
}

/// `{t : x ∩ (t, t+1) ≠ ∅}`
pub fn diamond_unit_future(x: &Signal) -> Signal {
    let (frame, window) = frame_for(x, &one(), &Rational::zero(), &Rational::zero());
    let slice = x.restrict(&window);
    frame.sweep(&[&slice], &[Rational::zero(), -one()], |t| {
        slice.meets(&future_window(t))
    })
}

/// `{t : x ∩ (t-1, t) ≠ ∅}`, with the window clipped to the domain.
pub fn diamond_unit_past(x: &Signal) -> Signal {
    let (frame, window) = frame_for(x, &Rational::zero(), &one(), &one());
    let slice = x.restrict(&window);
    let domain = x.domain().interval();
    frame.sweep(&[&slice], &[Rational::zero(), one()], |t| {
        Interval::open(t - one(), t.clone())
            .intersect(&domain)
            .is_some_and(|w| slice.meets(&w))
    })
}

/// `{t : |x ∩ (t, t+1)| ≥ n}`; a component of positive length holds
/// infinitely many points.
pub fn count_unit(x: &Signal, n: usize) -> Signal {
    assert!(n >= 1, "counting threshold must be at least 1");
    let (frame, window) = frame_for(x, &one(), &Rational::zero(), &Rational::zero());
    let slice = x.restrict(&window);
    frame.sweep(&[&slice], &[Rational::zero(), -one()], |t| {
        slice.cardinality_at_least(&future_window(t), n)
    })
}

/// Whether strictly increasing `t < t_1 < … < t_n < t+1` exist with
/// `t_i ∈ slices[i]`. The window is cut into the points and open gaps of
/// the joint refinement; each witness is placed as early as possible. A
/// point hosts one witness, an open gap hosts any run of consecutive
/// indices whose sets all cover it.
fn pnueli_holds(slices: &[IntervalSet], t: &Rational) -> bool {
    let window = future_window(t);
    let end = t + one();
    let mut cuts: Vec<Rational> = slices
        .iter()
        .flat_map(|s| s.overlapping(&window).iter())
        .flat_map(|c| [c.lower().cloned(), c.upper().cloned()])
        .flatten()
        .filter(|e| e > t && e < &end)
        .collect();
    cuts.sort();
    cuts.dedup();

    let n = slices.len();
    let mut next = 0;
    let mut left = t.clone();
    for c in cuts.iter().chain(std::iter::once(&end)) {
        let mid = midpoint(&left, c);
        while next < n && slices[next].contains(&mid) {
            next += 1;
        }
        if next == n {
            return true;
        }
        if c == &end {
            break;
        }
        if slices[next].contains(c) {
            next += 1;
            if next == n {
                return true;
            }
        }
        left = c.clone();
    }
    false
}

/// `{t : ∃ t < t_1 < … < t_n < t+1, t_i ∈ xs[i]}`
pub fn pnueli_unit(xs: &[Signal]) -> Result<Signal, EvalError> {
    assert!(!xs.is_empty(), "Pnueli modality needs at least one argument");
    let aligned = Signal::align_all(xs)?;
    let (frame, window) = frame_for(&aligned[0], &one(), &Rational::zero(), &Rational::zero());
    let slices: Vec<IntervalSet> = aligned.iter().map(|s| s.restrict(&window)).collect();
    let refs: Vec<&IntervalSet> = slices.iter().collect();
    Ok(frame.sweep(&refs, &[Rational::zero(), -one()], |t| {
        pnueli_holds(&slices, t)
    }))
}

/// The component of `set` covering some `(t, t+ε)`.
fn run_after<'a>(set: &'a IntervalSet, t: &Rational) -> Option<&'a Interval> {
    let comps = set.components();
    let idx = comps.partition_point(|c| c.lower().is_some_and(|l| l <= t));
    let c = comps.get(idx.checked_sub(1)?)?;
    c.upper().is_some_and(|u| u > t).then_some(c)
}

/// The component of `set` covering some `(t-ε, t)`.
fn run_before<'a>(set: &'a IntervalSet, t: &Rational) -> Option<&'a Interval> {
    let comps = set.components();
    let idx = comps.partition_point(|c| c.lower().is_some_and(|l| l < t));
    let c = comps.get(idx.checked_sub(1)?)?;
    c.upper().is_some_and(|u| u >= t).then_some(c)
}

/// Strict non-matching until: some `t_1 > t` is in `y` and `x` holds on
/// `(t, t_1)`.
pub fn until(x: &Signal, y: &Signal) -> Result<Signal, EvalError> {
    let (x, y) = Signal::align(x, y)?;
    let span = rat(2, 1) * x.period();
    let (frame, window) = frame_for(&x, &span, &Rational::zero(), &Rational::zero());
    let xs = x.restrict(&window);
    let ys = y.restrict(&window);
    Ok(frame.sweep(&[&xs, &ys], &[Rational::zero()], |t| {
        // x holds on (t, b) for b up to the end of its run; t_1 may be b itself
        let Some(run) = run_after(&xs, t) else {
            return false;
        };
        let reach = run.upper().expect("slices are bounded").clone();
        ys.meets(&Interval::open_closed(t.clone(), reach))
    }))
}

/// Strict non-matching since: some `t_1 < t` in the domain is in `y` and
/// `x` holds on `(t_1, t)`.
pub fn since(x: &Signal, y: &Signal) -> Result<Signal, EvalError> {
    let (x, y) = Signal::align(x, y)?;
    let span = rat(2, 1) * x.period();
    let (frame, window) = frame_for(&x, &x.period().clone(), &span, &span);
    let xs = x.restrict(&window);
    let ys = y.restrict(&window);
    Ok(frame.sweep(&[&xs, &ys], &[Rational::zero()], |t| {
        let Some(run) = run_before(&xs, t) else {
            return false;
        };
        let from = run.lower().expect("slices are bounded").clone();
        ys.meets(&Interval::closed_open(from, t.clone()))
    }))
}
