//! Differential check of the engine against the naive pointwise oracle on
//! random formulas and signals.
//!
//! Run with `cargo run --release --example oracle_agreement [trials]`.

use dense_mtl::eval::Env;
use dense_mtl::gen::{random_formula, random_signal, FormulaShape, SignalShape};
use dense_mtl::oracle::{agreement_check, critical_samples};
use dense_mtl::signal::TimeDomain;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let trials: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(25);
    let shape = SignalShape::default();
    let mut points = 0;
    let mut failures = 0;
    for seed in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let domain = if seed % 2 == 0 {
            TimeDomain::FullLine
        } else {
            TimeDomain::HalfLine
        };
        let env = Env::new(domain)
            .with("P", random_signal(&mut rng, domain, &shape))
            .unwrap()
            .with("Q", random_signal(&mut rng, domain, &shape))
            .unwrap();
        let f = random_formula(&mut rng, &["P", "Q"], &FormulaShape::default());
        let (crit, mids) = critical_samples(&f, &env).unwrap();
        let samples = (crit.len() + mids.len()).max(50);
        let report = agreement_check(&f, &env, samples, seed).unwrap();
        points += report.total();
        if !report.all_agree() {
            failures += 1;
            println!("seed {seed}: {f}");
            for d in report.disagreements() {
                println!("  t={} engine={} oracle={}", d.t, d.engine as u8, d.oracle as u8);
            }
        }
    }
    println!("{trials} trials, {points} points, {failures} with disagreements");

    // the report format, on a small case
    let env = dense_mtl::lab::builtin_model("thm2".parse().unwrap()).unwrap();
    let f = "C2(P)".parse().unwrap();
    print!("{}", agreement_check(&f, &env, 8, 1).unwrap());
}
