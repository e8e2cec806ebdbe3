//! The semantic core: every modality as an exact transformer on signals,
//! and the structural-induction evaluator built from them.

mod ops;
mod sweep;

pub use ops::{
    count_unit, diamond_unit_future, diamond_unit_past, pnueli_unit, since, until,
};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::formula::Formula;
use crate::sets::Rational;
use crate::signal::{Signal, SignalError, TimeDomain};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("atom `{0}` is not bound")]
    UnboundAtom(String),
    #[error(transparent)]
    Signal(#[from] SignalError),
}

/// Atom bindings over one shared time domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Env {
    domain: TimeDomain,
    bindings: BTreeMap<String, Signal>,
}

impl Env {
    pub fn new(domain: TimeDomain) -> Self {
        Env {
            domain,
            bindings: BTreeMap::new(),
        }
    }

    pub fn bind(&mut self, name: impl Into<String>, signal: Signal) -> Result<(), EvalError> {
        if signal.domain() != self.domain {
            return Err(SignalError::DomainMismatch.into());
        }
        self.bindings.insert(name.into(), signal);
        Ok(())
    }

    pub fn with(mut self, name: impl Into<String>, signal: Signal) -> Result<Self, EvalError> {
        self.bind(name, signal)?;
        Ok(self)
    }

    pub fn domain(&self) -> TimeDomain {
        self.domain
    }

    pub fn get(&self, name: &str) -> Option<&Signal> {
        self.bindings.get(name)
    }

    pub fn lookup(&self, name: &str) -> Result<&Signal, EvalError> {
        self.get(name)
            .ok_or_else(|| EvalError::UnboundAtom(name.to_string()))
    }

    pub fn bindings(&self) -> impl Iterator<Item = (&String, &Signal)> {
        self.bindings.iter()
    }

    /// Translates every binding by `d` (full line only).
    pub fn shift(&self, d: &Rational) -> Result<Env, EvalError> {
        let mut out = Env::new(self.domain);
        for (name, s) in &self.bindings {
            out.bind(name.clone(), s.shift(d)?)?;
        }
        Ok(out)
    }
}

/// The canonical truth signal of `f` under `env`.
pub fn evaluate(f: &Formula, env: &Env) -> Result<Signal, EvalError> {
    let domain = env.domain();
    let out = match f {
        Formula::True => Signal::constant(domain, true),
        Formula::False => Signal::constant(domain, false),
        Formula::Atom(name) => env.lookup(name)?.clone(),
        Formula::Not(a) => evaluate(a, env)?.not(),
        Formula::And(a, b) => evaluate(a, env)?.and(&evaluate(b, env)?)?,
        Formula::Or(a, b) => evaluate(a, env)?.or(&evaluate(b, env)?)?,
        Formula::Implies(a, b) => evaluate(a, env)?.not().or(&evaluate(b, env)?)?,
        Formula::Until(a, b) => until(&evaluate(a, env)?, &evaluate(b, env)?)?,
        Formula::Since(a, b) => since(&evaluate(a, env)?, &evaluate(b, env)?)?,
        Formula::DiamondFuture(a) => diamond_unit_future(&evaluate(a, env)?),
        Formula::DiamondPast(a) => diamond_unit_past(&evaluate(a, env)?),
        Formula::Count(n, a) => count_unit(&evaluate(a, env)?, *n),
        Formula::Pnueli(args) => {
            let signals = args
                .iter()
                .map(|a| evaluate(a, env))
                .collect::<Result<Vec<_>, _>>()?;
            pnueli_unit(&signals)?
        }
    };
    Ok(out.canonicalize())
}

#[cfg(test)]
mod tests;
