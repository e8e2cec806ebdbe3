//! Builtin models, formula enumeration, trivialization reports and the
//! reproduction checks built on them.

mod check;
mod enumerate;
mod models;
mod report;

pub use check::{
    open_interval_value, paper_check, paper_check_with_budget, parity_profile, CheckReport,
    PaperCheck, CHECK_BUDGET, CHECK_DEPTH,
};
pub use enumerate::{enumerate_formulas, Enumeration, Logic};
pub use models::{builtin_model, ModelSpec};
pub use report::{report_from_signals, trivialization_report, ReportEntry, TrivializationReport};

use thiserror::Error;

use crate::eval::EvalError;
use crate::signal::SignalError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Signal(#[from] SignalError),
}
