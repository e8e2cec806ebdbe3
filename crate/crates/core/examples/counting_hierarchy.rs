//! Counting modalities on the lattice models `mk:k` and the hierarchy of
//! `C<n>` against the Pnueli modalities of lower arity.
//!
//! Run with `cargo run --example counting_hierarchy`.

use dense_mtl::lab::{paper_check, PaperCheck};

fn main() {
    for k in 2..=4 {
        print!("{}", paper_check(PaperCheck::Counting(k)).unwrap());
    }
    for n in 2..=3 {
        print!("{}", paper_check(PaperCheck::Hierarchy(n)).unwrap());
    }
}
