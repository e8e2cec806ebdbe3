//! Periodic and eventually periodic signals, their canonical form and the
//! signal file format.
//!
//! Run with `cargo run --example signals`.

use dense_mtl::sets::{parse_interval_list, rat};
use dense_mtl::signal::{parse_signal_file, Signal, TimeDomain};

fn main() {
    // P at every multiple of 2/3 on the half line
    let p = Signal::periodic(
        TimeDomain::HalfLine,
        rat(2, 3),
        parse_interval_list("[0,0]").unwrap(),
    )
    .unwrap();
    for t in [rat(0, 1), rat(1, 1), rat(4, 3)] {
        println!("P({t}) = {}", p.membership(&t).unwrap());
    }
    println!("P on [0,3]: {}", p.slice(&rat(0, 1), &rat(3, 1)).unwrap());

    // a redundant description canonicalizes to the minimal one
    let verbose = Signal::new(
        TimeDomain::HalfLine,
        rat(2, 1),
        parse_interval_list("[0,0],[2/3,2/3],[4/3,4/3]").unwrap(),
        rat(4, 3),
        parse_interval_list("[0,0],[2/3,2/3]").unwrap(),
    )
    .unwrap();
    println!("verbose:   {verbose}");
    println!("canonical: {}", verbose.canonicalize());
    assert_eq!(verbose.canonicalize(), p.canonicalize());

    let text = p.to_file_string();
    print!("--- signal file ---\n{text}");
    assert_eq!(parse_signal_file(&text).unwrap(), p.canonicalize());

    let q = Signal::periodic(
        TimeDomain::HalfLine,
        rat(1, 2),
        parse_interval_list("(0,1/4)").unwrap(),
    )
    .unwrap();
    let both = p.or(&q).unwrap().canonicalize();
    println!("P | Q: {both}");
}
