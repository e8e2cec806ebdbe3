//! Formula syntax: parsing, precedence-aware printing and error positions.
//!
//! Run with `cargo run --example parse_print`.

use dense_mtl::formula::{parse, Formula};

fn main() {
    for text in [
        "C2(P)",
        "P U Q S R",
        "!P U F1 Q",
        "(P U Q) U R",
        "P -> Q -> R",
        "Pn3(P, !P, P | Q)",
        "O1 (P & Q) | F1 C3(P)",
    ] {
        let f = parse(text).unwrap();
        println!(
            "{text:<24} => {f:<24} modal depth {} metric depth {}",
            f.modal_depth(),
            f.metric_depth()
        );
        assert_eq!(parse(&f.to_string()).unwrap(), f);
    }

    let built = Formula::until(
        Formula::not(Formula::atom("P")),
        Formula::count(2, Formula::atom("P")),
    );
    println!("built: {built}");

    for bad in ["P &", "C0(P)", "Pn2(P)", "P $ Q"] {
        let e = parse(bad).unwrap_err();
        println!("{bad:<8} (position {}) {e}", e.position());
    }
}
