use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Oracle;
use crate::eval::{evaluate, Env, EvalError};
use crate::formula::Formula;
use crate::sets::{ceil_div, floor_div, lcm, midpoint, rat, Interval, Rational};
use crate::signal::{Signal, TimeDomain};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleOutcome {
    pub t: Rational,
    pub engine: bool,
    pub oracle: bool,
}

impl SampleOutcome {
    pub fn agrees(&self) -> bool {
        self.engine == self.oracle
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AgreementReport {
    pub outcomes: Vec<SampleOutcome>,
}

impl AgreementReport {
    pub fn total(&self) -> usize {
        self.outcomes.len()
    }

    pub fn agreed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.agrees()).count()
    }

    pub fn all_agree(&self) -> bool {
        self.agreed() == self.total()
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &SampleOutcome> {
        self.outcomes.iter().filter(|o| !o.agrees())
    }
}

impl fmt::Display for AgreementReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            writeln!(
                f,
                "t={} engine={} oracle={}",
                o.t, o.engine as u8, o.oracle as u8
            )?;
        }
        writeln!(f, "agreement {}/{}", self.agreed(), self.total())
    }
}

/// Engine and oracle verdicts at each of `points`.
pub fn agreement_at(
    f: &Formula,
    env: &Env,
    points: &[Rational],
) -> Result<AgreementReport, EvalError> {
    let engine = evaluate(f, env)?;
    let mut oracle = Oracle::new(f, env)?;
    let mut outcomes = Vec::with_capacity(points.len());
    for t in points {
        outcomes.push(SampleOutcome {
            t: t.clone(),
            engine: engine.membership(t)?,
            oracle: oracle.check(t)?,
        });
    }
    Ok(AgreementReport { outcomes })
}

/// Two periods of the joint behaviour of `out` and the atoms of `f`; on the
/// half line the window also covers every transient.
pub fn sample_window(f: &Formula, env: &Env, out: &Signal) -> Result<(Rational, Rational), EvalError> {
    let mut period = out.period().clone();
    let mut transient = out.transient().clone();
    for name in f.atoms() {
        let s = env.lookup(&name)?;
        period = lcm(&period, s.period());
        transient = transient.max(s.transient().clone());
    }
    let span = rat(2, 1) * period;
    Ok(match env.domain() {
        TimeDomain::FullLine => (Rational::zero(), span),
        TimeDomain::HalfLine => (Rational::zero(), transient + span),
    })
}

/// Every endpoint of the result and of the atoms inside the sample window,
/// together with the window ends, followed by one midpoint per gap.
pub fn critical_samples(
    f: &Formula,
    env: &Env,
) -> Result<(Vec<Rational>, Vec<Rational>), EvalError> {
    let out = evaluate(f, env)?;
    let (lo, hi) = sample_window(f, env, &out)?;
    let window = Interval::closed(lo.clone(), hi.clone());
    let mut crit = BTreeSet::from([lo, hi]);
    crit.extend(out.restrict(&window).endpoints());
    for name in f.atoms() {
        crit.extend(env.lookup(&name)?.restrict(&window).endpoints());
    }
    let crit: Vec<Rational> = crit.into_iter().collect();
    let mids = crit.windows(2).map(|w| midpoint(&w[0], &w[1])).collect();
    Ok((crit, mids))
}

/// Compares engine and oracle at `samples` points: critical points first,
/// then gap midpoints, then seeded random small-denominator rationals from
/// the sample window.
pub fn agreement_check(
    f: &Formula,
    env: &Env,
    samples: usize,
    seed: u64,
) -> Result<AgreementReport, EvalError> {
    if samples == 0 {
        return Ok(AgreementReport::default());
    }
    let (crit, mids) = critical_samples(f, env)?;
    let (lo, hi) = (crit[0].clone(), crit[crit.len() - 1].clone());
    let mut seen = BTreeSet::new();
    let mut points = Vec::with_capacity(samples);
    for t in crit.into_iter().chain(mids) {
        if points.len() == samples {
            break;
        }
        if seen.insert(t.clone()) {
            points.push(t);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0u64;
    while points.len() < samples {
        // only finitely many grid points fit; widen the grid when crowded
        let max_den = 12 + (attempts / 256) as i64;
        attempts += 1;
        let den = Rational::from_integer(BigInt::from(rng.gen_range(1..=max_den)));
        let first = ceil_div(&lo, &(Rational::one() / &den));
        let last = floor_div(&hi, &(Rational::one() / &den));
        let range: i64 = (&last - &first).try_into().unwrap_or(i64::MAX);
        let k = &first + BigInt::from(rng.gen_range(0..=range));
        let t = Rational::from_integer(k) / &den;
        if seen.insert(t.clone()) {
            points.push(t);
        }
    }
    agreement_at(f, env, &points)
}
