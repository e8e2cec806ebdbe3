use std::fmt;

use crate::eval::{evaluate, Env};
use crate::formula::Formula;
use crate::signal::{Signal, TimeDomain, Triviality};

use super::LabError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportEntry {
    pub formula: String,
    pub class: Triviality,
    pub eventually: bool,
    /// For non-trivial entries, one period of the truth set that matches
    /// none of the trivial predicates.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TrivializationReport {
    pub entries: Vec<ReportEntry>,
    pub truncated: bool,
}

impl TrivializationReport {
    pub fn trivial(&self) -> usize {
        self.entries.iter().filter(|e| e.class.is_trivial()).count()
    }

    pub fn nontrivial(&self) -> usize {
        self.entries.len() - self.trivial()
    }

    pub fn all_trivial(&self) -> bool {
        self.nontrivial() == 0
    }

    pub fn summary(&self) -> String {
        format!(
            "total {} trivial {} nontrivial {} truncated {}",
            self.entries.len(),
            self.trivial(),
            self.nontrivial(),
            self.truncated as u8
        )
    }
}

impl fmt::Display for TrivializationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{}\t{}\t{}", e.formula, e.class, e.eventually as u8)?;
        }
        writeln!(f, "{}", self.summary())
    }
}

fn witness(s: &Signal, eventually: bool) -> String {
    let start = match s.domain() {
        TimeDomain::HalfLine if !eventually => num_traits::Zero::zero(),
        _ => s.transient().clone(),
    };
    let end = s.transient() + s.period();
    let slice = s.slice(&start, &end).expect("window inside the domain");
    format!("[{start},{end}]: {slice}")
}

/// Classifies already evaluated truth signals against the atom `P` of `env`.
pub fn report_from_signals(
    env: &Env,
    formulas: &[Formula],
    signals: &[Signal],
    eventually: bool,
) -> Result<TrivializationReport, LabError> {
    let p = env.lookup("P")?;
    let mut entries = Vec::with_capacity(formulas.len());
    for (f, s) in formulas.iter().zip(signals) {
        let class = s.classify_trivial(p, eventually)?;
        entries.push(ReportEntry {
            formula: f.to_string(),
            class,
            eventually,
            witness: (!class.is_trivial()).then(|| witness(s, eventually)),
        });
    }
    Ok(TrivializationReport {
        entries,
        truncated: false,
    })
}

/// Evaluates and classifies each formula on `env`.
pub fn trivialization_report(
    env: &Env,
    formulas: &[Formula],
    eventually: bool,
) -> Result<TrivializationReport, LabError> {
    let signals = formulas
        .iter()
        .map(|f| evaluate(f, env))
        .collect::<Result<Vec<_>, _>>()?;
    report_from_signals(env, formulas, &signals, eventually)
}
