//! The counting modality `C2` on the half-line model with `P` at every
//! multiple of 2/3: its truth set keeps alternating forever, while every
//! enumerated QTL formula settles into one of the trivial predicates.
//!
//! Run with `cargo run --example pnueli_witness`.

use dense_mtl::eval::evaluate;
use dense_mtl::formula::parse;
use dense_mtl::lab::{builtin_model, paper_check, parity_profile, ModelSpec, PaperCheck};
use dense_mtl::sets::rat;

fn main() {
    let env = builtin_model(ModelSpec::Thm2).unwrap();
    let c2 = evaluate(&parse("C2(P)").unwrap(), &env).unwrap();
    println!("C2(P) = {c2}");
    println!("on [0,4]: {}", c2.slice(&rat(0, 1), &rat(4, 1)).unwrap());

    let profile = parity_profile(2, 0..=5).unwrap();
    for (n, v) in profile.iter().enumerate() {
        println!("(n, n+1/3) for n={n}: {v:?}");
    }

    print!("{}", paper_check(PaperCheck::Pnueli).unwrap());
}
