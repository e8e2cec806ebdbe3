//! Enumerating formulas up to semantic equivalence and classifying each
//! representative against the trivial predicates.
//!
//! Run with `cargo run --example enumeration`.

use dense_mtl::lab::{
    builtin_model, enumerate_formulas, report_from_signals, Logic, ModelSpec,
};

fn main() {
    for (logic, spec, eventually) in [
        (Logic::Qtl, ModelSpec::Mk(3), false),
        (Logic::Qtl, ModelSpec::Thm2, true),
        (Logic::QtlPnueli(2), ModelSpec::Thm3(3), true),
    ] {
        let env = builtin_model(spec).unwrap();
        for depth in 0..=2 {
            let found = enumerate_formulas(logic, depth, &env, 5000).unwrap();
            let mut report =
                report_from_signals(&env, &found.formulas, &found.signals, eventually).unwrap();
            report.truncated = found.truncated;
            println!(
                "{logic} depth {depth} on {spec}: {} ({} pruned)",
                report.summary(),
                found.pruned
            );
        }
    }

    let env = builtin_model(ModelSpec::Thm2).unwrap();
    let found = enumerate_formulas(Logic::Qtl, 1, &env, 5000).unwrap();
    print!(
        "{}",
        report_from_signals(&env, &found.formulas, &found.signals, true).unwrap()
    );
}
