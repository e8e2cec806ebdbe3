use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::formula::parse;
use crate::gen::{random_signal, SignalShape};
use crate::sets::{parse_interval_list, rat, IntervalSet};
use crate::signal::Triviality;

fn set(text: &str) -> IntervalSet {
    parse_interval_list(text).unwrap()
}

fn points(domain: TimeDomain, period: Rational) -> Signal {
    Signal::periodic(domain, period, set("[0,0]")).unwrap()
}

fn mk(k: i64) -> Signal {
    points(TimeDomain::FullLine, rat(1, k))
}

fn thm2() -> Signal {
    points(TimeDomain::HalfLine, rat(2, 3))
}

fn origin_only() -> Signal {
    Signal::new(TimeDomain::HalfLine, rat(1, 1), set("[0,0]"), rat(1, 1), set("{}")).unwrap()
}

fn env_p(p: Signal) -> Env {
    Env::new(p.domain()).with("P", p).unwrap()
}

fn eval(text: &str, env: &Env) -> Signal {
    evaluate(&parse(text).unwrap(), env).unwrap()
}

fn constant(domain: TimeDomain, v: bool) -> Signal {
    Signal::constant(domain, v)
}

#[test]
fn diamond_future_examples() {
    assert_eq!(diamond_unit_future(&mk(2)), constant(TimeDomain::FullLine, true));
    assert_eq!(
        diamond_unit_future(&constant(TimeDomain::FullLine, false)),
        constant(TimeDomain::FullLine, false)
    );
    assert_eq!(
        diamond_unit_future(&origin_only()),
        constant(TimeDomain::HalfLine, false)
    );
    // gaps of length exactly 1 leave the multiples uncovered
    assert_eq!(
        diamond_unit_future(&mk(1)),
        mk(1).not().canonicalize()
    );
}

#[test]
fn diamond_past_examples() {
    let out = diamond_unit_past(&origin_only());
    assert_eq!(out.slice(&rat(0, 1), &rat(3, 1)).unwrap(), set("(0,1)"));
    assert!(Signal::equal(&out, &constant(TimeDomain::HalfLine, false), true).unwrap());
    assert_eq!(
        diamond_unit_past(&constant(TimeDomain::FullLine, true)),
        constant(TimeDomain::FullLine, true)
    );
    let half = diamond_unit_past(&constant(TimeDomain::HalfLine, true));
    assert!(!half.membership(&rat(0, 1)).unwrap());
    assert_eq!(half.slice(&rat(0, 1), &rat(2, 1)).unwrap(), set("(0,2]"));
}

#[test]
fn until_examples() {
    let p = mk(3);
    assert_eq!(until(&p.not(), &p).unwrap(), constant(TimeDomain::FullLine, true));
    assert_eq!(
        until(&p, &constant(TimeDomain::FullLine, true)).unwrap(),
        constant(TimeDomain::FullLine, false)
    );
    assert_eq!(
        until(
            &constant(TimeDomain::FullLine, true),
            &constant(TimeDomain::FullLine, false)
        )
        .unwrap(),
        constant(TimeDomain::FullLine, false)
    );
    // the witness may sit where the left operand fails
    let x = Signal::periodic(TimeDomain::FullLine, rat(1, 1), set("[0,1/2)")).unwrap();
    let y = Signal::periodic(TimeDomain::FullLine, rat(1, 1), set("[1/2,1/2]")).unwrap();
    assert_eq!(until(&x, &y).unwrap().pattern(), &set("[0,1/2)"));
}

#[test]
fn since_examples() {
    let out = since(&constant(TimeDomain::HalfLine, true), &thm2()).unwrap();
    assert!(!out.membership(&rat(0, 1)).unwrap());
    assert_eq!(out.slice(&rat(0, 1), &rat(5, 1)).unwrap(), set("(0,5]"));
    assert_eq!(
        since(
            &constant(TimeDomain::FullLine, false),
            &constant(TimeDomain::FullLine, true)
        )
        .unwrap(),
        constant(TimeDomain::FullLine, false)
    );
    assert_eq!(
        since(
            &constant(TimeDomain::FullLine, true),
            &constant(TimeDomain::FullLine, true)
        )
        .unwrap(),
        constant(TimeDomain::FullLine, true)
    );
}

#[test]
fn count_examples() {
    assert_eq!(
        count_unit(&mk(2), 2).classify_trivial(&mk(2), false).unwrap(),
        Triviality::NotP
    );
    assert_eq!(
        count_unit(&mk(3), 2).classify_trivial(&mk(3), false).unwrap(),
        Triviality::True
    );
    let c2 = count_unit(&thm2(), 2);
    assert!(!c2.membership(&rat(1, 6)).unwrap());
    assert!(c2.membership(&rat(7, 6)).unwrap());
}

#[test]
fn counting_classification_on_mk() {
    for k in 2..=6 {
        let here = count_unit(&mk(k), k as usize);
        let next = count_unit(&mk(k + 1), k as usize);
        assert_eq!(here.classify_trivial(&mk(k), false).unwrap(), Triviality::NotP);
        assert_eq!(next.classify_trivial(&mk(k + 1), false).unwrap(), Triviality::True);
    }
}

#[test]
fn pnueli_examples() {
    let p = mk(2);
    assert_eq!(
        pnueli_unit(&[p.clone(), p.not()]).unwrap(),
        constant(TimeDomain::FullLine, true)
    );
    assert_eq!(
        pnueli_unit(&[p.clone(), p.clone(), p.clone()]).unwrap(),
        constant(TimeDomain::FullLine, false)
    );
    // order matters: a P-point must precede an open stretch of Q
    let q = Signal::periodic(TimeDomain::FullLine, rat(2, 1), set("(0,1/4)")).unwrap();
    let pq = pnueli_unit(&[mk(1), q.clone()]).unwrap();
    let qp = pnueli_unit(&[q, mk(1)]).unwrap();
    assert_ne!(pq, qp);
}

#[test]
fn evaluate_examples() {
    let c2 = eval("C2(P)", &env_p(thm2()));
    assert_eq!(c2.period(), &rat(2, 3));
    assert_eq!(c2.pattern(), &set("(1/3,2/3)"));
    assert_eq!(c2.transient(), &rat(0, 1));
    assert_eq!(
        c2.classify_trivial(&thm2(), true).unwrap(),
        Triviality::Nontrivial
    );
    assert!(!Signal::equal(&c2, &constant(TimeDomain::HalfLine, true), true).unwrap());

    let env = env_p(mk(3));
    assert_eq!(eval("F1 true", &env), constant(TimeDomain::FullLine, true));
    assert_eq!(eval("P U true", &env), constant(TimeDomain::FullLine, false));
    assert_eq!(
        eval("C3(P)", &env).classify_trivial(&mk(3), false).unwrap(),
        Triviality::NotP
    );
    assert_eq!(
        eval("C3(P)", &env_p(mk(4))).classify_trivial(&mk(4), false).unwrap(),
        Triviality::True
    );
    assert_eq!(
        evaluate(&parse("Q").unwrap(), &env),
        Err(EvalError::UnboundAtom("Q".into()))
    );
}

#[test]
fn env_rejects_mixed_domains() {
    let mut env = Env::new(TimeDomain::FullLine);
    assert!(env.bind("P", thm2()).is_err());
    assert!(env.bind("P", mk(2)).is_ok());
}

fn arb(seed: u64, domain: TimeDomain) -> Signal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_signal(&mut rng, domain, &SignalShape::default())
}

fn domain_of(half: bool) -> TimeDomain {
    if half {
        TimeDomain::HalfLine
    } else {
        TimeDomain::FullLine
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn count_chain_and_base_case(seed in any::<u64>(), half in any::<bool>()) {
        let x = arb(seed, domain_of(half));
        prop_assert_eq!(count_unit(&x, 1), diamond_unit_future(&x));
        prop_assert_eq!(pnueli_unit(std::slice::from_ref(&x)).unwrap(), diamond_unit_future(&x));
        for n in 1..4 {
            prop_assert!(count_unit(&x, n + 1).is_subset(&count_unit(&x, n)).unwrap());
        }
    }

    #[test]
    fn pnueli_with_equal_arguments_counts(seed in any::<u64>(), half in any::<bool>(), n in 1usize..5) {
        let x = arb(seed, domain_of(half));
        let copies = vec![x.clone(); n];
        prop_assert_eq!(pnueli_unit(&copies).unwrap(), count_unit(&x, n));
    }

    #[test]
    fn pnueli_prefix_monotone(seed in any::<u64>(), half in any::<bool>()) {
        let d = domain_of(half);
        let xs: Vec<Signal> = (0..3).map(|i| arb(seed.wrapping_add(i), d)).collect();
        let full = pnueli_unit(&xs).unwrap();
        let shorter = pnueli_unit(&xs[..2]).unwrap();
        prop_assert!(full.is_subset(&shorter).unwrap());
    }

    #[test]
    fn window_operators_distribute_and_are_monotone(seed in any::<u64>(), half in any::<bool>()) {
        let d = domain_of(half);
        let x = arb(seed, d);
        let y = arb(seed ^ 0x5555, d);
        let xy = x.or(&y).unwrap();
        prop_assert_eq!(
            diamond_unit_future(&xy),
            diamond_unit_future(&x).or(&diamond_unit_future(&y)).unwrap().canonicalize()
        );
        prop_assert!(count_unit(&x, 2).is_subset(&count_unit(&xy, 2)).unwrap());
        let z = arb(seed ^ 0xaaaa, d);
        prop_assert!(until(&x, &z).unwrap().is_subset(&until(&xy, &z).unwrap()).unwrap());
        prop_assert!(until(&z, &x).unwrap().is_subset(&until(&z, &xy).unwrap()).unwrap());
    }
}

