use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::eval::{
    diamond_unit_future, diamond_unit_past, evaluate, pnueli_unit, since, until, Env, EvalError,
};
use crate::formula::Formula;
use crate::signal::{Signal, SignalError};

use super::LabError;

/// Modalities available to enumerated formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Logic {
    /// Until and since.
    Tl,
    /// Until, since and the unit diamonds.
    Qtl,
    /// `Qtl` plus the Pnueli modalities `Pn2` to `Pn<m>`.
    QtlPnueli(usize),
}

impl Logic {
    fn max_pnueli(self) -> usize {
        match self {
            Logic::QtlPnueli(m) => m,
            _ => 1,
        }
    }

    /// Whether `f` only uses modalities of this logic (counting excluded).
    pub fn admits(self, f: &Formula) -> bool {
        let here = match f {
            Formula::DiamondFuture(_) | Formula::DiamondPast(_) => self != Logic::Tl,
            Formula::Count(..) => false,
            Formula::Pnueli(args) => args.len() >= 2 && args.len() <= self.max_pnueli(),
            _ => true,
        };
        here && f.children().into_iter().all(|c| self.admits(c))
    }
}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Logic::Tl => write!(f, "tl"),
            Logic::Qtl => write!(f, "qtl"),
            Logic::QtlPnueli(m) => write!(f, "qtl+p{m}"),
        }
    }
}

impl FromStr for Logic {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, LabError> {
        match s {
            "tl" => Ok(Logic::Tl),
            "qtl" => Ok(Logic::Qtl),
            _ => s
                .strip_prefix("qtl+p")
                .and_then(|m| m.parse().ok())
                .filter(|&m| m >= 1)
                .map(Logic::QtlPnueli)
                .ok_or_else(|| {
                    LabError::InvalidParameter(format!(
                        "unknown logic `{s}` (expected tl, qtl or qtl+p<m>)"
                    ))
                }),
        }
    }
}

/// Semantic representatives of every formula up to a modal depth.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub formulas: Vec<Formula>,
    /// Truth signal of each representative on the dedup environment.
    pub signals: Vec<Signal>,
    pub truncated: bool,
    /// Candidates discarded because an earlier formula had the same signal.
    pub pruned: usize,
}

struct Pool {
    formulas: Vec<Formula>,
    signals: Vec<Signal>,
    index: HashMap<Signal, usize>,
    budget: usize,
    pruned: usize,
}

/// Why enumeration stopped early.
enum Stop {
    Full,
    Failed(LabError),
}

impl From<EvalError> for Stop {
    fn from(e: EvalError) -> Self {
        Stop::Failed(e.into())
    }
}

impl From<SignalError> for Stop {
    fn from(e: SignalError) -> Self {
        Stop::Failed(e.into())
    }
}

impl Pool {
    fn offer(&mut self, f: Formula, s: Signal) -> Result<(), Stop> {
        if self.index.contains_key(&s) {
            self.pruned += 1;
            return Ok(());
        }
        if self.formulas.len() == self.budget {
            return Err(Stop::Full);
        }
        self.index.insert(s.clone(), self.formulas.len());
        self.formulas.push(f);
        self.signals.push(s);
        Ok(())
    }

    /// Closes the pool under negation, conjunction and disjunction, treating
    /// entries before `from` as already closed.
    fn boolean_closure(&mut self, from: usize) -> Result<(), Stop> {
        let mut next = from;
        while next < self.formulas.len() {
            let (f, s) = (self.formulas[next].clone(), self.signals[next].clone());
            self.offer(Formula::not(f.clone()), s.not().canonicalize())?;
            for j in 0..next {
                let (g, t) = (self.formulas[j].clone(), self.signals[j].clone());
                self.offer(Formula::and(g.clone(), f.clone()), t.and(&s)?.canonicalize())?;
                self.offer(Formula::or(g, f.clone()), t.or(&s)?.canonicalize())?;
            }
            next += 1;
        }
        Ok(())
    }

    /// Applies every modality of `logic` to the current entries, then
    /// closes under the connectives again.
    fn modal_layer(&mut self, logic: Logic) -> Result<(), Stop> {
        let start = self.formulas.len();
        let args: Vec<(Formula, Signal)> = self
            .formulas
            .iter()
            .cloned()
            .zip(self.signals.iter().cloned())
            .collect();
        for (f, s) in &args {
            for (g, t) in &args {
                self.offer(Formula::until(f.clone(), g.clone()), until(s, t)?)?;
                self.offer(Formula::since(f.clone(), g.clone()), since(s, t)?)?;
            }
        }
        if logic != Logic::Tl {
            for (f, s) in &args {
                self.offer(Formula::diamond_future(f.clone()), diamond_unit_future(s))?;
                self.offer(Formula::diamond_past(f.clone()), diamond_unit_past(s))?;
            }
        }
        for n in 2..=logic.max_pnueli() {
            for tuple in distinct_tuples(args.len(), n, self.budget) {
                let signals: Vec<Signal> = tuple.iter().map(|&i| args[i].1.clone()).collect();
                let f = Formula::pnueli(tuple.iter().map(|&i| args[i].0.clone()).collect());
                self.offer(f, pnueli_unit(&signals)?)?;
            }
        }
        self.boolean_closure(start)
    }
}

/// Distinct-index tuples of length `n` over `0..size` in lexicographic
/// order, at most `cap` of them.
fn distinct_tuples(size: usize, n: usize, cap: usize) -> Vec<Vec<usize>> {
    fn go(size: usize, n: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if out.len() == cap {
            return;
        }
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..size {
            if !cur.contains(&i) {
                cur.push(i);
                go(size, n, cap, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(size, n, cap, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Every formula over atom `P` of modal depth at most `depth` in `logic`,
/// reduced to one representative per truth signal on `env`. At most
/// `budget` representatives are kept, and each Pnueli arity sees at most
/// `budget` argument tuples.
pub fn enumerate_formulas(
    logic: Logic,
    depth: usize,
    env: &Env,
    budget: usize,
) -> Result<Enumeration, LabError> {
    if budget == 0 {
        return Err(LabError::InvalidParameter("budget must be positive".into()));
    }
    let mut pool = Pool {
        formulas: Vec::new(),
        signals: Vec::new(),
        index: HashMap::new(),
        budget,
        pruned: 0,
    };
    let outcome = (|| {
        for f in [Formula::True, Formula::False, Formula::atom("P")] {
            let s = evaluate(&f, env)?;
            pool.offer(f, s)?;
        }
        pool.boolean_closure(0)?;
        for _ in 0..depth {
            pool.modal_layer(logic)?;
        }
        Ok(())
    })();
    let truncated = match outcome {
        Ok(()) => false,
        Err(Stop::Full) => true,
        Err(Stop::Failed(e)) => return Err(e),
    };
    Ok(Enumeration {
        formulas: pool.formulas,
        signals: pool.signals,
        truncated,
        pruned: pool.pruned,
    })
}
