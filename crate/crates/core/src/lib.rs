//! Exact evaluation of metric temporal logic over dense time.
//!
//! Truth sets are periodic (full line) or eventually periodic (half-line)
//! unions of rational-endpoint intervals. Every modality, including the
//! counting modalities `C<n>` and the Pnueli modalities `Pn<n>`, is computed
//! exactly as a transformer on such sets.

pub mod cli;
pub mod eval;
pub mod formula;
pub mod gen;
pub mod lab;
pub mod oracle;
pub mod sets;
pub mod signal;
