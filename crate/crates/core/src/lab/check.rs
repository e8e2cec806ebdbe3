use std::fmt;
use std::str::FromStr;

use crate::eval::evaluate;
use crate::formula::Formula;
use crate::sets::{rat, Interval, Rational};
use crate::signal::{Signal, Triviality};

use super::{builtin_model, enumerate_formulas, report_from_signals, LabError, Logic, ModelSpec};

/// Budget used by the reproduction checks.
pub const CHECK_BUDGET: usize = 5000;

/// Depth of the enumerations run by the reproduction checks.
pub const CHECK_DEPTH: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaperCheck {
    /// `C2(P)` is eventually non-trivial on `thm2` while every enumerated
    /// QTL formula is eventually trivial there.
    Pnueli,
    /// The same separation for `C<n>` against the Pnueli modalities below
    /// `n` on `thm3:n`.
    Hierarchy(u32),
    /// `C<k>(P)` is `!P` on `mk:k` and `true` on `mk:k+1`.
    Counting(u32),
    /// Every enumerated QTL formula is exactly trivial on `mk:k`.
    Triviality(u32),
}

impl fmt::Display for PaperCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PaperCheck::Pnueli => write!(f, "pnueli"),
            PaperCheck::Hierarchy(n) => write!(f, "hierarchy:{n}"),
            PaperCheck::Counting(k) => write!(f, "counting:{k}"),
            PaperCheck::Triviality(k) => write!(f, "triviality:{k}"),
        }
    }
}

impl FromStr for PaperCheck {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, LabError> {
        let bad = || {
            LabError::InvalidParameter(format!(
                "unknown check `{s}` (expected pnueli, hierarchy:<n>, counting:<k> or triviality:<k>)"
            ))
        };
        if s == "pnueli" {
            return Ok(PaperCheck::Pnueli);
        }
        let (name, arg) = s.split_once(':').ok_or_else(bad)?;
        let n: u32 = arg.parse().map_err(|_| bad())?;
        if n < 2 {
            return Err(LabError::InvalidParameter(format!("{name} needs a parameter >= 2")));
        }
        match name {
            "hierarchy" => Ok(PaperCheck::Hierarchy(n)),
            "counting" => Ok(PaperCheck::Counting(n)),
            "triviality" => Ok(PaperCheck::Triviality(n)),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: PaperCheck,
    pub lines: Vec<String>,
    pub passed: bool,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check {}", self.check)?;
        for line in &self.lines {
            writeln!(f, "  {line}")?;
        }
        writeln!(f, "{}", if self.passed { "PASS" } else { "FAIL" })
    }
}

/// The constant truth value of `s` on the open interval `(a, b)`, if any.
pub fn open_interval_value(s: &Signal, a: &Rational, b: &Rational) -> Option<bool> {
    let slice = s.slice(a, b).ok()?;
    let inside = Interval::open(a.clone(), b.clone());
    let part = slice.restrict(&inside);
    if part.is_empty() {
        Some(false)
    } else if part.components() == [inside] {
        Some(true)
    } else {
        None
    }
}

/// Truth of `C<n>(P)` on `thm3:n` over `(k, k + 1/(2n-1))` for each `k` in
/// `ks`. With `n = 2` this is the `thm2` model.
pub fn parity_profile(n: u32, ks: std::ops::RangeInclusive<i64>) -> Result<Vec<Option<bool>>, LabError> {
    let env = builtin_model(ModelSpec::Thm3(n))?;
    let c = evaluate(&Formula::count(n as usize, Formula::atom("P")), &env)?;
    let width = rat(1, 2 * n as i64 - 1);
    Ok(ks
        .map(|k| {
            let a = rat(k, 1);
            let b = &a + &width;
            open_interval_value(&c, &a, &b)
        })
        .collect())
}

fn describe(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "mixed",
    }
}

/// Enumerates `logic` on `spec` and classifies every representative.
fn enumerated_triviality(
    logic: Logic,
    spec: ModelSpec,
    eventually: bool,
    budget: usize,
    lines: &mut Vec<String>,
) -> Result<bool, LabError> {
    let env = builtin_model(spec)?;
    let found = enumerate_formulas(logic, CHECK_DEPTH, &env, budget)?;
    let mut report = report_from_signals(&env, &found.formulas, &found.signals, eventually)?;
    report.truncated = found.truncated;
    lines.push(format!(
        "{logic} depth {CHECK_DEPTH} on {spec} ({}): {}",
        if eventually { "eventually" } else { "exact" },
        report.summary()
    ));
    if let Some(bad) = report.entries.iter().find(|e| !e.class.is_trivial()) {
        lines.push(format!("non-trivial: {}", bad.formula));
    }
    Ok(report.all_trivial())
}

/// Evidence for the alternation of `C<n>(P)` on `thm3:n`; `pinned` fixes
/// the value expected on even-indexed intervals.
fn alternation(n: u32, pinned: Option<bool>, lines: &mut Vec<String>) -> Result<bool, LabError> {
    let profile = parity_profile(n, 0..=5)?;
    let width = format!("1/{}", 2 * n - 1);
    for (k, v) in profile.iter().enumerate() {
        lines.push(format!("C{n}(P) on ({k},{k}+{width}): {}", describe(*v)));
    }
    let alternates = profile.iter().all(Option::is_some)
        && profile.windows(2).all(|w| w[0] != w[1]);
    if alternates {
        let even = profile[0].expect("checked");
        lines.push(format!(
            "orientation: {} for even k, {} for odd k",
            describe(Some(even)),
            describe(Some(!even))
        ));
    }
    Ok(alternates && pinned.is_none_or(|v| profile[0] == Some(v)))
}

fn eventual_class(n: u32, spec: ModelSpec, lines: &mut Vec<String>) -> Result<bool, LabError> {
    let env = builtin_model(spec)?;
    let f = Formula::count(n as usize, Formula::atom("P"));
    let report = report_from_signals(&env, std::slice::from_ref(&f), &[evaluate(&f, &env)?], true)?;
    let entry = &report.entries[0];
    lines.push(format!(
        "{} on {spec} eventually: {} {}",
        entry.formula,
        entry.class,
        entry.witness.as_deref().unwrap_or("")
    ));
    Ok(entry.class == Triviality::Nontrivial)
}

/// Runs a reproduction check with the default budget.
pub fn paper_check(check: PaperCheck) -> Result<CheckReport, LabError> {
    paper_check_with_budget(check, CHECK_BUDGET)
}

pub fn paper_check_with_budget(check: PaperCheck, budget: usize) -> Result<CheckReport, LabError> {
    let mut lines = Vec::new();
    let passed = match check {
        PaperCheck::Pnueli => {
            let witness = eventual_class(2, ModelSpec::Thm2, &mut lines)?;
            let parity = alternation(2, Some(false), &mut lines)?;
            let trivial =
                enumerated_triviality(Logic::Qtl, ModelSpec::Thm2, true, budget, &mut lines)?;
            witness && parity && trivial
        }
        PaperCheck::Hierarchy(n) => {
            let spec = ModelSpec::Thm3(n);
            let witness = eventual_class(n, spec, &mut lines)?;
            let parity = alternation(n, None, &mut lines)?;
            let logic = Logic::QtlPnueli(n as usize - 1);
            let trivial = enumerated_triviality(logic, spec, true, budget, &mut lines)?;
            witness && parity && trivial
        }
        PaperCheck::Counting(k) => {
            let f = Formula::count(k as usize, Formula::atom("P"));
            let mut ok = true;
            for (spec, want) in [
                (ModelSpec::Mk(k), Triviality::NotP),
                (ModelSpec::Mk(k + 1), Triviality::True),
            ] {
                let env = builtin_model(spec)?;
                let got = evaluate(&f, &env)?.classify_trivial(env.lookup("P")?, false)?;
                lines.push(format!("{f} on {spec}: {got} (expected {want})"));
                ok &= got == want;
            }
            ok
        }
        PaperCheck::Triviality(k) => {
            enumerated_triviality(Logic::Qtl, ModelSpec::Mk(k), false, budget, &mut lines)?
        }
    };
    Ok(CheckReport {
        check,
        lines,
        passed,
    })
}
