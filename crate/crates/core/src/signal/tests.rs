use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::gen::{random_signal, SignalShape};
use crate::sets::{parse_interval_list, rat};

fn set(text: &str) -> IntervalSet {
    parse_interval_list(text).unwrap()
}

fn points(domain: TimeDomain, period: Rational) -> Signal {
    Signal::periodic(domain, period, set("[0,0]")).unwrap()
}

fn m(k: i64) -> Signal {
    points(TimeDomain::FullLine, rat(1, k))
}

fn thm2() -> Signal {
    points(TimeDomain::HalfLine, rat(2, 3))
}

#[test]
fn membership_examples() {
    assert!(m(3).membership(&rat(5, 3)).unwrap());
    assert!(!m(3).membership(&rat(1, 2)).unwrap());
    assert!(m(3).membership(&rat(-2, 3)).unwrap());
    assert!(thm2().membership(&rat(4, 3)).unwrap());
    assert!(!thm2().membership(&rat(1, 1)).unwrap());
    assert!(matches!(
        thm2().membership(&rat(-1, 3)),
        Err(SignalError::OutsideDomain(_))
    ));
}

#[test]
fn align_examples() {
    let a = Signal::periodic(TimeDomain::FullLine, rat(1, 2), set("[0,1/4]")).unwrap();
    let b = m(3);
    let (a2, b2) = Signal::align(&a, &b).unwrap();
    assert_eq!(a2.period(), &rat(1, 1));
    assert_eq!(b2.period(), &rat(1, 1));
    assert_eq!(b2.pattern(), &set("[0,0],[1/3,1/3],[2/3,2/3]"));
    assert!(Signal::equal(&a, &a2, false).unwrap());

    let (x, y) = Signal::align(&a, &a).unwrap();
    assert_eq!(x, a);
    assert_eq!(y, a);

    let late = Signal::new(
        TimeDomain::HalfLine,
        rat(5, 2),
        set("[0,1]"),
        rat(1, 1),
        set("(0,1/2)"),
    )
    .unwrap();
    let early = points(TimeDomain::HalfLine, rat(1, 1));
    let (l2, e2) = Signal::align(&late, &early).unwrap();
    assert_eq!(l2.transient(), &rat(5, 2));
    assert_eq!(e2.transient(), &rat(5, 2));
    assert_eq!(e2.prefix(), &set("[0,0],[1,1],[2,2]"));
    assert_eq!(e2.pattern(), &set("[1/2,1/2]"));
    assert!(Signal::equal(&early, &e2, false).unwrap());

    assert_eq!(
        Signal::align(&m(2), &thm2()),
        Err(SignalError::DomainMismatch)
    );
}

#[test]
fn combine_examples() {
    let not_p = Signal::combine(BoolOp::Not, &m(3), None).unwrap();
    assert_eq!(not_p.period(), &rat(1, 3));
    assert_eq!(not_p.pattern(), &set("(0,1/3)"));
    let x = m(3);
    assert!(x.and(&x.not()).unwrap().is_empty());
    assert!(x.or(&x.not()).unwrap().is_full());
    assert!(Signal::combine(BoolOp::And, &x, None).is_err());
}

#[test]
fn slice_examples() {
    assert_eq!(
        m(3).slice(&rat(0, 1), &rat(1, 1)).unwrap(),
        set("[0,0],[1/3,1/3],[2/3,2/3],[1,1]")
    );
    let empty = Signal::constant(TimeDomain::FullLine, false);
    assert!(empty.slice(&rat(-3, 1), &rat(7, 2)).unwrap().is_empty());
    assert_eq!(
        thm2().slice(&rat(0, 1), &rat(3, 2)).unwrap(),
        set("[0,0],[2/3,2/3],[4/3,4/3]")
    );
    assert!(thm2().slice(&rat(-1, 1), &rat(1, 1)).is_err());
    assert!(m(3).slice(&rat(1, 1), &rat(0, 1)).is_err());
}

#[test]
fn canonicalize_examples() {
    let s = Signal::periodic(TimeDomain::FullLine, rat(2, 3), set("[0,0],[1/3,1/3]")).unwrap();
    let c = s.canonicalize();
    assert_eq!(c.period(), &rat(1, 3));
    assert_eq!(c.pattern(), &set("[0,0]"));

    let t = Signal::periodic(TimeDomain::FullLine, rat(7, 5), set("[0,7/5)")).unwrap();
    let c = t.canonicalize();
    assert_eq!(c.period(), &rat(1, 1));
    assert_eq!(c.pattern(), &set("[0,1)"));

    let h = Signal::new(
        TimeDomain::HalfLine,
        rat(2, 1),
        set("[0,0],(1/2,1),[1,1],(3/2,2)"),
        rat(1, 1),
        set("[0,0],(1/2,1)"),
    )
    .unwrap();
    let c = h.canonicalize();
    assert_eq!(c.transient(), &rat(0, 1));
    assert!(c.prefix().is_empty());
}

#[test]
fn canonical_transient_without_least_element() {
    // extra isolated point at 1/2: any transient in (1/2, ...] is valid
    let s = Signal::new(
        TimeDomain::HalfLine,
        rat(2, 1),
        set("[0,0],[1/2,1/2],[1,1]"),
        rat(1, 1),
        set("[0,0]"),
    )
    .unwrap();
    let c = s.canonicalize();
    assert_eq!(c.transient(), &rat(1, 1));
    assert_eq!(c.prefix(), &set("[0,0],[1/2,1/2]"));
    assert_eq!(c.pattern(), &set("[0,0]"));
    assert!(Signal::equal(&s, &c, false).unwrap());

    // a deviation open on the right gives a least transient end
    let s = Signal::new(
        TimeDomain::HalfLine,
        rat(3, 1),
        set("[0,1/2)"),
        rat(1, 1),
        set("{}"),
    )
    .unwrap();
    assert_eq!(s.canonicalize().transient(), &rat(1, 2));
}

#[test]
fn equal_examples() {
    let a = Signal::periodic(TimeDomain::FullLine, rat(1, 2), set("[0,0]")).unwrap();
    let b = Signal::periodic(TimeDomain::FullLine, rat(1, 1), set("[0,0],[1/2,1/2]")).unwrap();
    assert!(Signal::equal(&a, &b, false).unwrap());

    let garbage = Signal::new(
        TimeDomain::HalfLine,
        rat(1, 1),
        set("(1/5,2/5)"),
        rat(1, 2),
        set("[0,0]"),
    )
    .unwrap();
    let pure = points(TimeDomain::HalfLine, rat(1, 2));
    assert!(!Signal::equal(&garbage, &pure, false).unwrap());
    assert!(Signal::equal(&garbage, &pure, true).unwrap());
    assert!(Signal::equal(&a, &thm2(), true).is_err());
}

#[test]
fn classify_constants_and_atom() {
    let p = m(3);
    assert_eq!(p.classify_trivial(&p, false).unwrap(), Triviality::P);
    assert_eq!(p.not().classify_trivial(&p, false).unwrap(), Triviality::NotP);
    let t = Signal::constant(TimeDomain::FullLine, true);
    assert_eq!(t.classify_trivial(&p, false).unwrap(), Triviality::True);
    // degenerate atom: True wins over P
    assert_eq!(t.classify_trivial(&t, false).unwrap(), Triviality::True);
    let half = Signal::periodic(TimeDomain::FullLine, rat(1, 1), set("[0,1/2)")).unwrap();
    assert_eq!(half.classify_trivial(&p, false).unwrap(), Triviality::Nontrivial);
}

#[test]
fn shift_by_period_is_identity() {
    let s = Signal::periodic(TimeDomain::FullLine, rat(3, 4), set("[0,1/4),[1/2,1/2]")).unwrap();
    assert_eq!(s.shift(&rat(3, 4)).unwrap(), s);
    assert_eq!(s.shift(&rat(-3, 2)).unwrap(), s);
    let moved = s.shift(&rat(1, 4)).unwrap();
    assert_eq!(moved.pattern(), &set("[1/4,1/2),[3/4,3/4]").restrict(&Interval::closed_open(rat(0, 1), rat(3, 4))).union(&set("[0,0]")));
    assert!(thm2().shift(&rat(1, 1)).is_err());
}

#[test]
fn file_format_round_trip() {
    let s = Signal::new(
        TimeDomain::HalfLine,
        rat(2, 1),
        set("[1/2,1/2]"),
        rat(2, 3),
        set("(1/3,2/3)"),
    )
    .unwrap();
    let text = s.to_file_string();
    assert_eq!(
        text,
        "domain halfline\nperiod 2/3\npattern (1/3,2/3)\ntransient 2\nprefix [1/2,1/2]\n"
    );
    assert!(Signal::equal(&parse_signal_file(&text).unwrap(), &s, false).unwrap());

    let parsed = parse_signal_file("# M_3\ndomain line\npattern [0,0]  # one point\nperiod 1/3\n").unwrap();
    assert_eq!(parsed, m(3));
}

#[test]
fn file_format_errors() {
    assert!(matches!(
        parse_signal_file("domain line\nperiod 1\n"),
        Err(SignalError::File { .. })
    ));
    assert!(matches!(
        parse_signal_file("domain line\nperiod 1\npattern {}\ncolor red\n"),
        Err(SignalError::File { line: 4, .. })
    ));
    assert!(matches!(
        parse_signal_file("domain line\nperiod 1\nperiod 2\npattern {}\n"),
        Err(SignalError::File { line: 3, .. })
    ));
    assert!(matches!(
        parse_signal_file("domain line\nperiod 0\npattern {}\n"),
        Err(SignalError::Invalid(_))
    ));
    assert!(matches!(
        parse_signal_file("domain line\nperiod 1\npattern [0,2]\n"),
        Err(SignalError::Invalid(_))
    ));
    assert!(matches!(
        parse_signal_file("domain line\nperiod 1\npattern {}\ntransient 1\n"),
        Err(SignalError::Invalid(_))
    ));
    assert!(matches!(
        parse_signal_file("domain plane\nperiod 1\npattern {}\n"),
        Err(SignalError::File { line: 1, .. })
    ));
}

fn sample_points() -> Vec<Rational> {
    (0..=96).map(|i| rat(i, 16)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_idempotent_and_faithful(seed in any::<u64>(), half in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let domain = if half { TimeDomain::HalfLine } else { TimeDomain::FullLine };
        let s = random_signal(&mut rng, domain, &SignalShape::default());
        let c = s.canonicalize();
        prop_assert_eq!(c.canonicalize(), c.clone());
        for x in sample_points() {
            prop_assert_eq!(s.holds(&x), c.holds(&x), "x = {}", x);
        }
    }

    #[test]
    fn representation_independence(seed in any::<u64>(), half in any::<bool>(), mult in 1i64..4, extra in 0i64..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let domain = if half { TimeDomain::HalfLine } else { TimeDomain::FullLine };
        let s = random_signal(&mut rng, domain, &SignalShape::default());
        let t = s.transient() + rat(extra, 4);
        let other = s.reexpress(&t, &(s.period() * rat(mult, 1)));
        prop_assert!(Signal::equal(&s, &other, false).unwrap());
        prop_assert_eq!(s.canonicalize(), other.canonicalize());
        prop_assert_eq!(s.not().canonicalize(), other.not().canonicalize());
    }

    #[test]
    fn combine_agrees_with_membership(seed in any::<u64>(), half in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let domain = if half { TimeDomain::HalfLine } else { TimeDomain::FullLine };
        let a = random_signal(&mut rng, domain, &SignalShape::default());
        let b = random_signal(&mut rng, domain, &SignalShape::default());
        let and = a.and(&b).unwrap();
        let or = a.or(&b).unwrap();
        let not = a.not();
        for x in sample_points() {
            prop_assert_eq!(and.holds(&x), a.holds(&x) && b.holds(&x));
            prop_assert_eq!(or.holds(&x), a.holds(&x) || b.holds(&x));
            prop_assert_eq!(not.holds(&x), !a.holds(&x));
        }
    }

    #[test]
    fn full_line_shift_coherence(seed in any::<u64>(), num in -24i64..24) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_signal(&mut rng, TimeDomain::FullLine, &SignalShape::default());
        let d = rat(num, 12);
        let moved = s.shift(&d).unwrap();
        for x in sample_points() {
            prop_assert_eq!(moved.holds(&(&x + &d)), s.holds(&x));
        }
        prop_assert_eq!(s.shift(s.period()).unwrap(), s.clone());
        prop_assert_eq!(moved.shift(&-d).unwrap(), s);
    }
}
