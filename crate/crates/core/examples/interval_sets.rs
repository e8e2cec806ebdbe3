//! Exact interval-set algebra over the rationals.
//!
//! Run with `cargo run --example interval_sets`.

use dense_mtl::sets::{parse_interval_list, rat, Interval, IntervalSet};

fn main() {
    let a = parse_interval_list("[0,1),(1,2],[5/2,5/2]").unwrap();
    let b = parse_interval_list("[1/2,3]").unwrap();

    println!("a           = {a}");
    println!("b           = {b}");
    println!("a ∪ b       = {}", a.union(&b));
    println!("a ∩ b       = {}", a.intersection(&b));
    println!("b \\ a       = {}", b.difference(&a));
    println!("complement a = {}", a.complement());

    // adjacent pieces merge into one component
    let merged = IntervalSet::normalize(vec![
        Interval::closed_open(rat(0, 1), rat(1, 1)),
        Interval::point(rat(1, 1)),
        Interval::open(rat(1, 1), rat(2, 1)),
    ]);
    println!("[0,1) ∪ {{1}} ∪ (1,2) = {merged}");

    let window = Interval::open(rat(0, 1), rat(1, 1));
    let dots = parse_interval_list("[1/3,1/3],[2/3,2/3]").unwrap();
    for n in 1..=3 {
        println!(
            "at least {n} points of {dots} in {window}: {}",
            dots.cardinality_at_least(&window, n)
        );
    }
}
