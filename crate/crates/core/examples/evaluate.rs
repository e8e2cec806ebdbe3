//! Exact evaluation of formulas to truth signals.
//!
//! Run with `cargo run --example evaluate`.

use dense_mtl::eval::{evaluate, Env};
use dense_mtl::formula::parse;
use dense_mtl::sets::{parse_interval_list, rat};
use dense_mtl::signal::{Signal, TimeDomain};

fn main() {
    let p = Signal::periodic(
        TimeDomain::HalfLine,
        rat(2, 3),
        parse_interval_list("[0,0]").unwrap(),
    )
    .unwrap();
    let q = Signal::new(
        TimeDomain::HalfLine,
        rat(1, 1),
        parse_interval_list("[0,1/2)").unwrap(),
        rat(1, 1),
        parse_interval_list("(1/4,1/2]").unwrap(),
    )
    .unwrap();
    let env = Env::new(TimeDomain::HalfLine)
        .with("P", p)
        .unwrap()
        .with("Q", q)
        .unwrap();

    for text in [
        "F1 P",
        "C2(P)",
        "Pn2(P, Q)",
        "!P U P",
        "true S P",
        "O1 Q & !Q",
        "Q U (P & O1 Q)",
    ] {
        let s = evaluate(&parse(text).unwrap(), &env).unwrap();
        println!("{text:<16} {s}");
        println!("{:<16} on [0,3]: {}", "", s.slice(&rat(0, 1), &rat(3, 1)).unwrap());
    }
}
