//! Seeded random generators for signals and formulas, used by the
//! agreement checks, the property tests and the examples.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::formula::Formula;
use crate::sets::{rat, Interval, IntervalSet, Rational};
use crate::signal::{Signal, TimeDomain};

/// Shape limits for [`random_signal`].
#[derive(Debug, Clone)]
pub struct SignalShape {
    pub max_components: usize,
    /// Endpoints are drawn from the grid `(1/denominator)·Z`.
    pub denominator: i64,
    pub periods: Vec<Rational>,
    /// Largest transient end, in grid steps, for half-line signals.
    pub max_transient_steps: i64,
}

impl Default for SignalShape {
    fn default() -> Self {
        SignalShape {
            max_components: 4,
            denominator: 12,
            periods: vec![
                rat(1, 3),
                rat(1, 2),
                rat(2, 3),
                rat(3, 4),
                rat(1, 1),
                rat(3, 2),
                rat(2, 1),
            ],
            max_transient_steps: 24,
        }
    }
}

/// A random subset of `[0, end)` with at most `max_components` components
/// and endpoints on the grid.
fn random_set<R: Rng>(rng: &mut R, end: &Rational, shape: &SignalShape) -> IntervalSet {
    let steps = (end * Rational::from_integer(shape.denominator.into()))
        .to_integer()
        .try_into()
        .unwrap_or(0i64);
    if steps == 0 {
        return IntervalSet::empty();
    }
    let count = rng.gen_range(0..=shape.max_components);
    let mut cuts: Vec<i64> = (0..=steps).collect::<Vec<_>>();
    cuts.shuffle(rng);
    let mut cuts: Vec<i64> = cuts.into_iter().take(2 * count).collect();
    cuts.sort_unstable();
    let mut raw = Vec::new();
    for pair in cuts.chunks(2) {
        let a = rat(pair[0], shape.denominator);
        if pair.len() == 1 || rng.gen_bool(0.25) {
            if pair[0] < steps {
                raw.push(Interval::point(a));
            }
            continue;
        }
        let b = rat(pair[1], shape.denominator);
        let lower_closed = rng.gen_bool(0.5);
        let upper_closed = pair[1] < steps && rng.gen_bool(0.5);
        raw.push(Interval::new(Some(a), lower_closed, Some(b), upper_closed).expect("ordered cuts"));
    }
    IntervalSet::normalize(raw)
}

pub fn random_signal<R: Rng>(rng: &mut R, domain: TimeDomain, shape: &SignalShape) -> Signal {
    let period = shape.periods.choose(rng).expect("period choices").clone();
    let pattern = random_set(rng, &period, shape);
    let (transient, prefix) = match domain {
        TimeDomain::HalfLine if rng.gen_bool(0.6) => {
            let t = rat(rng.gen_range(1..=shape.max_transient_steps), shape.denominator);
            let prefix = random_set(rng, &t, shape);
            (t, prefix)
        }
        _ => (Rational::zero(), IntervalSet::empty()),
    };
    Signal::new(domain, transient, prefix, period, pattern).expect("generated signal is valid")
}

/// Which modalities random formulas may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaShape {
    pub max_depth: usize,
    pub max_count: usize,
    pub max_pnueli: usize,
}

impl Default for FormulaShape {
    fn default() -> Self {
        FormulaShape {
            max_depth: 3,
            max_count: 3,
            max_pnueli: 3,
        }
    }
}

/// A random formula over `atoms` whose modal depth is at most `shape.max_depth`.
pub fn random_formula<R: Rng>(rng: &mut R, atoms: &[&str], shape: &FormulaShape) -> Formula {
    random_formula_at(rng, atoms, shape, shape.max_depth, 4)
}

fn random_formula_at<R: Rng>(
    rng: &mut R,
    atoms: &[&str],
    shape: &FormulaShape,
    depth: usize,
    size: usize,
) -> Formula {
    let leaf = |rng: &mut R| match rng.gen_range(0..8) {
        0 => Formula::True,
        1 => Formula::False,
        _ => Formula::atom(*atoms.choose(rng).expect("at least one atom")),
    };
    if size == 0 {
        return leaf(rng);
    }
    let choice = rng.gen_range(0..14);
    let sub = |rng: &mut R, d: usize| random_formula_at(rng, atoms, shape, d, size - 1);
    if depth == 0 {
        return match choice % 5 {
            0 => Formula::not(sub(rng, 0)),
            1 => Formula::and(sub(rng, 0), sub(rng, 0)),
            2 => Formula::or(sub(rng, 0), sub(rng, 0)),
            _ => leaf(rng),
        };
    }
    let d = depth - 1;
    match choice {
        0 => leaf(rng),
        1 => Formula::not(sub(rng, depth)),
        2 => Formula::and(sub(rng, depth), sub(rng, depth)),
        3 => Formula::or(sub(rng, depth), sub(rng, depth)),
        4 => Formula::implies(sub(rng, depth), sub(rng, depth)),
        5 | 6 => Formula::until(sub(rng, d), sub(rng, d)),
        7 | 8 => Formula::since(sub(rng, d), sub(rng, d)),
        9 => Formula::diamond_future(sub(rng, d)),
        10 => Formula::diamond_past(sub(rng, d)),
        11 => Formula::count(rng.gen_range(1..=shape.max_count), sub(rng, d)),
        _ => {
            let n = rng.gen_range(1..=shape.max_pnueli);
            Formula::pnueli((0..n).map(|_| sub(rng, d)).collect())
        }
    }
}
