//! A deliberately naive pointwise evaluator used as ground truth for the
//! engine. It reads the truth tables literally and searches for witnesses
//! over representatives of the regions on which every subformula is
//! constant. Nothing here calls into the eval transformers.

mod regions;
mod report;

pub use regions::{region_decomposition, Piece, Region, RegionDecomposition};
pub use report::{
    agreement_at, agreement_check, critical_samples, sample_window, AgreementReport, SampleOutcome,
};

use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::eval::{Env, EvalError};
use crate::formula::Formula;
use crate::sets::{lcm, rat, Interval, Rational};
use crate::signal::{Signal, SignalError, TimeDomain};

use regions::{cut_points, pieces};

/// The truth value of `f` at `t`, computed directly from the definitions.
pub fn pointwise_eval(f: &Formula, env: &Env, t: &Rational) -> Result<bool, EvalError> {
    let mut oracle = Oracle::new(f, env)?;
    oracle.check(t)
}

/// Memoised pointwise evaluation of one formula under one environment.
pub(crate) struct Oracle<'a> {
    root: &'a Formula,
    domain: TimeDomain,
    env: &'a Env,
    atoms: Vec<&'a Signal>,
    // every subformula is periodic with this period past its settling time
    period: Rational,
    latest_transient: Rational,
    memo: HashMap<MemoKey, bool>,
    cuts: HashMap<usize, CutCache>,
}

/// Depth-first search for a witness tuple; argument truth values are
/// computed on demand.
struct TupleSearch<'f, 'c> {
    args: &'f [Formula],
    candidates: &'c [Rational],
    truth: Vec<Vec<Option<bool>>>,
    // failed[i][j]: args[i..] cannot be placed at candidates[j..]
    failed: Vec<Vec<bool>>,
}

impl TupleSearch<'_, '_> {
    fn holds(&mut self, oracle: &mut Oracle<'_>, i: usize, j: usize) -> bool {
        if let Some(v) = self.truth[i][j] {
            return v;
        }
        let v = oracle.at(&self.args[i], &self.candidates[j]);
        self.truth[i][j] = Some(v);
        v
    }

    fn fits(&mut self, oracle: &mut Oracle<'_>, i: usize, j: usize) -> bool {
        if i == self.args.len() {
            return true;
        }
        if self.failed[i][j] {
            return false;
        }
        for k in j..self.candidates.len() {
            if self.holds(oracle, i, k) && self.fits(oracle, i + 1, k + 1) {
                return true;
            }
        }
        self.failed[i][j] = true;
        false
    }
}

/// Subformula address and time. Rationals are kept in lowest terms, so
/// hashing numerator and denominator is consistent with equality and much
/// cheaper than the generic rational hash.
#[derive(PartialEq, Eq)]
struct MemoKey(usize, Rational);

impl Hash for MemoKey {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state);
        self.1.numer().hash(state);
        self.1.denom().hash(state);
    }
}

/// Sorted cut points strictly inside `(lo, hi)` for one metric depth.
struct CutCache {
    lo: Rational,
    hi: Rational,
    cuts: Vec<Rational>,
}

impl<'a> Oracle<'a> {
    pub(crate) fn new(root: &'a Formula, env: &'a Env) -> Result<Self, EvalError> {
        let mut atoms = Vec::new();
        for name in root.atoms() {
            atoms.push(env.lookup(&name)?);
        }
        let period = atoms
            .iter()
            .fold(Rational::one(), |acc, s| lcm(&acc, s.period()));
        let latest_transient = atoms
            .iter()
            .map(|s| s.transient().clone())
            .max()
            .unwrap_or_else(Rational::zero);
        Ok(Oracle {
            root,
            domain: env.domain(),
            env,
            atoms,
            period,
            latest_transient,
            memo: HashMap::new(),
            cuts: HashMap::new(),
        })
    }

    pub(crate) fn check(&mut self, t: &Rational) -> Result<bool, EvalError> {
        if !self.domain.contains(t) {
            return Err(SignalError::OutsideDomain(t.clone()).into());
        }
        Ok(self.at(self.root, t))
    }

    /// Cells of `window` on which every subformula of metric depth at most
    /// `depth` is constant.
    fn cells(&mut self, window: &Interval, depth: usize) -> Vec<Piece> {
        let lo = window.lower().expect("bounded window");
        let hi = window.upper().expect("bounded window");
        let cached = self.cuts.get(&depth);
        if !cached.is_some_and(|c| &c.lo < lo && &c.hi > hi) {
            // grow the cached range well past the request to limit refills
            let margin = &self.period + Rational::one();
            let (mut from, mut to) = (lo - &margin, hi + &margin);
            if let Some(c) = cached {
                from = from.min(&c.lo - &margin);
                to = to.max(&c.hi + &margin);
            }
            let cuts = self.compute_cuts(&from, &to, depth);
            self.cuts.insert(
                depth,
                CutCache {
                    lo: from,
                    hi: to,
                    cuts,
                },
            );
        }
        let all = &self.cuts[&depth].cuts;
        let start = all.partition_point(|c| c <= lo);
        let end = all.partition_point(|c| c < hi);
        pieces(window, &all[start..end])
    }

    fn compute_cuts(&self, lo: &Rational, hi: &Rational, depth: usize) -> Vec<Rational> {
        let mut cuts = cut_points(&self.atoms, lo, hi, depth);
        if self.domain == TimeDomain::HalfLine {
            // the domain edge acts like an endpoint of every signal
            for j in 0..=depth as i64 {
                let c = Rational::from_integer(BigInt::from(j));
                if &c > lo && &c < hi {
                    cuts.push(c);
                }
            }
            cuts.sort();
            cuts.dedup();
        }
        cuts
    }

    /// Time after which every subformula of modal depth below `depth` is
    /// periodic. Each modal layer settles at most `2p + 1` later.
    fn settled_by(&self, depth: usize) -> Rational {
        let per_layer = rat(2, 1) * &self.period + Rational::one();
        &self.latest_transient + per_layer * Rational::from_integer(BigInt::from(depth))
    }

    fn at(&mut self, f: &Formula, t: &Rational) -> bool {
        let key = MemoKey(f as *const Formula as usize, t.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let v = self.decide(f, t);
        self.memo.insert(key, v);
        v
    }

    fn decide(&mut self, f: &Formula, t: &Rational) -> bool {
        match f {
            Formula::True => true,
            Formula::False => false,
            Formula::Atom(name) => self
                .env
                .get(name)
                .expect("atoms checked on construction")
                .holds(t),
            Formula::Not(a) => !self.at(a, t),
            Formula::And(a, b) => self.at(a, t) && self.at(b, t),
            Formula::Or(a, b) => self.at(a, t) || self.at(b, t),
            Formula::Implies(a, b) => !self.at(a, t) || self.at(b, t),
            Formula::DiamondFuture(a) => {
                let window = Interval::open(t.clone(), t + Rational::one());
                self.cells(&window, a.metric_depth())
                    .iter()
                    .any(|c| self.at(a, &c.representative()))
            }
            Formula::DiamondPast(a) => {
                let Some(window) =
                    Interval::open(t - Rational::one(), t.clone()).intersect(&self.domain.interval())
                else {
                    return false;
                };
                self.cells(&window, a.metric_depth())
                    .iter()
                    .any(|c| self.at(a, &c.representative()))
            }
            Formula::Count(n, a) => {
                let window = Interval::open(t.clone(), t + Rational::one());
                let mut points = 0;
                for c in self.cells(&window, a.metric_depth()) {
                    if self.at(a, &c.representative()) {
                        if !c.is_point() {
                            return true;
                        }
                        points += 1;
                    }
                }
                points >= *n
            }
            Formula::Pnueli(args) => self.pnueli(args, t),
            Formula::Until(a, b) => self.until(a, b, t),
            Formula::Since(a, b) => self.since(a, b, t),
        }
    }

    /// Exhaustive search for `t < t_1 < … < t_n < t+1` with `t_i ∈ args[i]`.
    /// An open cell contributes `n` distinct sample points so that it can
    /// host any number of consecutive witnesses.
    fn pnueli(&mut self, args: &[Formula], t: &Rational) -> bool {
        let n = args.len();
        let depth = args.iter().map(Formula::metric_depth).max().unwrap_or(0);
        let window = Interval::open(t.clone(), t + Rational::one());
        let mut candidates = Vec::new();
        for c in self.cells(&window, depth) {
            match c {
                Piece::Point(x) => candidates.push(x),
                Piece::Gap(a, b) => {
                    let step = (&b - &a) / Rational::from_integer(BigInt::from(n + 1));
                    for i in 1..=n {
                        candidates.push(&a + &step * Rational::from_integer(BigInt::from(i)));
                    }
                }
            }
        }
        let mut search = TupleSearch {
            args,
            candidates: &candidates,
            truth: vec![vec![None; candidates.len()]; n],
            failed: vec![vec![false; candidates.len() + 1]; n],
        };
        search.fits(self, 0, 0)
    }

    fn until(&mut self, a: &Formula, b: &Formula, t: &Rational) -> bool {
        let depth = a.metric_depth().max(b.metric_depth());
        let modal = a.modal_depth().max(b.modal_depth());
        let base = match self.domain {
            TimeDomain::FullLine => t.clone(),
            TimeDomain::HalfLine => t.clone().max(self.settled_by(modal)),
        };
        // past `base` a left operand holding for a full period holds forever,
        // and a right operand that ever holds does so within every period
        let horizon = base + &self.period + Rational::one();
        let window = Interval::open_closed(t.clone(), horizon);
        for cell in self.cells(&window, depth) {
            let x = cell.representative();
            let left = self.at(a, &x);
            if cell.is_point() {
                if self.at(b, &x) {
                    return true;
                }
                if !left {
                    return false;
                }
            } else {
                if !left {
                    return false;
                }
                if self.at(b, &x) {
                    return true;
                }
            }
        }
        false
    }

    fn since(&mut self, a: &Formula, b: &Formula, t: &Rational) -> bool {
        let depth = a.metric_depth().max(b.metric_depth());
        let floor = match self.domain {
            TimeDomain::FullLine => t - &self.period - Rational::one(),
            TimeDomain::HalfLine => Rational::zero(),
        };
        if &floor >= t {
            return false;
        }
        let window = Interval::closed_open(floor, t.clone());
        for cell in self.cells(&window, depth).into_iter().rev() {
            let x = cell.representative();
            let left = self.at(a, &x);
            if cell.is_point() {
                if self.at(b, &x) {
                    return true;
                }
                if !left {
                    return false;
                }
            } else {
                if !left {
                    return false;
                }
                if self.at(b, &x) {
                    return true;
                }
            }
        }
        false
    }
}
