use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use super::{Rational, SetError};

/// A connected set of rationals. `None` endpoints stand for −∞ / +∞ and are
/// always open. A degenerate interval `[a,a]` is a single point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lower: Option<Rational>,
    upper: Option<Rational>,
    lower_closed: bool,
    upper_closed: bool,
}

fn cmp_lower(a: (&Option<Rational>, bool), b: (&Option<Rational>, bool)) -> Ordering {
    match (a.0, b.0) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        // a closed lower bound starts earlier than an open one at the same value
        (Some(x), Some(y)) => x.cmp(y).then_with(|| b.1.cmp(&a.1)),
    }
}

fn cmp_upper(a: (&Option<Rational>, bool), b: (&Option<Rational>, bool)) -> Ordering {
    match (a.0, b.0) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Greater,
        (Some(_), None) => Ordering::Less,
        (Some(x), Some(y)) => x.cmp(y).then_with(|| a.1.cmp(&b.1)),
    }
}

impl Interval {
    pub fn new(
        lower: Option<Rational>,
        lower_closed: bool,
        upper: Option<Rational>,
        upper_closed: bool,
    ) -> Result<Self, SetError> {
        if (lower.is_none() && lower_closed) || (upper.is_none() && upper_closed) {
            return Err(SetError::MalformedInterval(
                "infinite endpoints must be open".into(),
            ));
        }
        if let (Some(l), Some(u)) = (&lower, &upper) {
            match l.cmp(u) {
                Ordering::Greater => {
                    return Err(SetError::MalformedInterval(format!(
                        "lower bound {l} exceeds upper bound {u}"
                    )))
                }
                Ordering::Equal if !(lower_closed && upper_closed) => {
                    return Err(SetError::MalformedInterval(format!(
                        "degenerate interval at {l} must be closed on both sides"
                    )))
                }
                _ => {}
            }
        }
        Ok(Interval {
            lower,
            upper,
            lower_closed,
            upper_closed,
        })
    }

    /// Builds the interval if it is nonempty; empty combinations yield `None`.
    pub(crate) fn nonempty(
        lower: Option<Rational>,
        lower_closed: bool,
        upper: Option<Rational>,
        upper_closed: bool,
    ) -> Option<Self> {
        let lower_closed = lower_closed && lower.is_some();
        let upper_closed = upper_closed && upper.is_some();
        if let (Some(l), Some(u)) = (&lower, &upper) {
            match l.cmp(u) {
                Ordering::Greater => return None,
                Ordering::Equal if !(lower_closed && upper_closed) => return None,
                _ => {}
            }
        }
        Some(Interval {
            lower,
            upper,
            lower_closed,
            upper_closed,
        })
    }

    fn expect_valid(
        lower: Option<Rational>,
        lower_closed: bool,
        upper: Option<Rational>,
        upper_closed: bool,
    ) -> Self {
        match Interval::new(lower, lower_closed, upper, upper_closed) {
            Ok(i) => i,
            Err(e) => panic!("{e}"),
        }
    }

    /// `[a,b]`. Panics if `a > b`.
    pub fn closed(a: Rational, b: Rational) -> Self {
        Self::expect_valid(Some(a), true, Some(b), true)
    }

    /// `(a,b)`. Panics unless `a < b`.
    pub fn open(a: Rational, b: Rational) -> Self {
        Self::expect_valid(Some(a), false, Some(b), false)
    }

    /// `[a,b)`. Panics unless `a < b`.
    pub fn closed_open(a: Rational, b: Rational) -> Self {
        Self::expect_valid(Some(a), true, Some(b), false)
    }

    /// `(a,b]`. Panics unless `a < b`.
    pub fn open_closed(a: Rational, b: Rational) -> Self {
        Self::expect_valid(Some(a), false, Some(b), true)
    }

    pub fn point(a: Rational) -> Self {
        Interval {
            lower: Some(a.clone()),
            upper: Some(a),
            lower_closed: true,
            upper_closed: true,
        }
    }

    pub fn full() -> Self {
        Interval {
            lower: None,
            upper: None,
            lower_closed: false,
            upper_closed: false,
        }
    }

    /// `[a, +∞)`
    pub fn at_least(a: Rational) -> Self {
        Interval {
            lower: Some(a),
            upper: None,
            lower_closed: true,
            upper_closed: false,
        }
    }

    pub fn lower(&self) -> Option<&Rational> {
        self.lower.as_ref()
    }

    pub fn upper(&self) -> Option<&Rational> {
        self.upper.as_ref()
    }

    pub fn lower_closed(&self) -> bool {
        self.lower_closed
    }

    pub fn upper_closed(&self) -> bool {
        self.upper_closed
    }

    pub fn is_point(&self) -> bool {
        matches!((&self.lower, &self.upper), (Some(l), Some(u)) if l == u)
    }

    pub fn is_bounded(&self) -> bool {
        self.lower.is_some() && self.upper.is_some()
    }

    pub fn has_positive_length(&self) -> bool {
        !self.is_point()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = match &self.lower {
            None => true,
            Some(l) => l < x || (self.lower_closed && l == x),
        };
        let below = match &self.upper {
            None => true,
            Some(u) => x < u || (self.upper_closed && u == x),
        };
        above && below
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let (lower, lower_closed) = if cmp_lower(self.lower_key(), other.lower_key()).is_ge() {
            (self.lower.clone(), self.lower_closed)
        } else {
            (other.lower.clone(), other.lower_closed)
        };
        let (upper, upper_closed) = if cmp_upper(self.upper_key(), other.upper_key()).is_le() {
            (self.upper.clone(), self.upper_closed)
        } else {
            (other.upper.clone(), other.upper_closed)
        };
        Interval::nonempty(lower, lower_closed, upper, upper_closed)
    }

    pub fn shift(&self, d: &Rational) -> Interval {
        Interval {
            lower: self.lower.as_ref().map(|l| l + d),
            upper: self.upper.as_ref().map(|u| u + d),
            lower_closed: self.lower_closed,
            upper_closed: self.upper_closed,
        }
    }

    fn lower_key(&self) -> (&Option<Rational>, bool) {
        (&self.lower, self.lower_closed)
    }

    fn upper_key(&self) -> (&Option<Rational>, bool) {
        (&self.upper, self.upper_closed)
    }

    /// True when `next` (which starts no earlier than `self`) overlaps or
    /// abuts `self` so that the union is a single interval.
    fn touches(&self, next: &Interval) -> bool {
        match (&self.upper, &next.lower) {
            (None, _) | (_, None) => true,
            (Some(u), Some(l)) => l < u || (l == u && (self.upper_closed || next.lower_closed)),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lower_closed { '[' } else { '(' };
        let close = if self.upper_closed { ']' } else { ')' };
        write!(f, "{open}")?;
        match &self.lower {
            Some(l) => write!(f, "{l}")?,
            None => write!(f, "-inf")?,
        }
        write!(f, ",")?;
        match &self.upper {
            Some(u) => write!(f, "{u}")?,
            None => write!(f, "inf")?,
        }
        write!(f, "{close}")
    }
}

/// A finite union of intervals in normal form: components are sorted,
/// pairwise disjoint and no two of them can be merged.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    components: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet::default()
    }

    pub fn full() -> Self {
        IntervalSet {
            components: vec![Interval::full()],
        }
    }

    pub fn from_interval(i: Interval) -> Self {
        IntervalSet { components: vec![i] }
    }

    /// Unique normal form of the union of `raw`.
    pub fn normalize(raw: impl IntoIterator<Item = Interval>) -> Self {
        let mut raw: Vec<Interval> = raw.into_iter().collect();
        raw.sort_by(|a, b| cmp_lower(a.lower_key(), b.lower_key()));
        let mut components: Vec<Interval> = Vec::with_capacity(raw.len());
        for next in raw {
            match components.last_mut() {
                Some(cur) if cur.touches(&next) => {
                    if cmp_upper(next.upper_key(), cur.upper_key()).is_gt() {
                        cur.upper = next.upper;
                        cur.upper_closed = next.upper_closed;
                    }
                }
                _ => components.push(next),
            }
        }
        IntervalSet { components }
    }

    pub fn components(&self) -> &[Interval] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.components.len() == 1 && self.components[0] == Interval::full()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    /// Index of the component containing `x`, by binary search.
    pub fn component_index(&self, x: &Rational) -> Option<usize> {
        // first component whose lower bound lies strictly above x
        let idx = self
            .components
            .partition_point(|c| c.lower.as_ref().is_none_or(|l| l <= x));
        if idx == 0 {
            return None;
        }
        let c = &self.components[idx - 1];
        c.contains(x).then_some(idx - 1)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.component_index(x).is_some()
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        IntervalSet::normalize(
            self.components
                .iter()
                .chain(other.components.iter())
                .cloned(),
        )
    }

    pub fn complement(&self) -> IntervalSet {
        let mut out = Vec::with_capacity(self.components.len() + 1);
        let mut prev: Option<&Interval> = None;
        for c in &self.components {
            let (lower, lower_closed) = match prev {
                None => (None, false),
                Some(p) => (p.upper.clone(), !p.upper_closed),
            };
            if let Some(gap) = Interval::nonempty(lower, lower_closed, c.lower.clone(), !c.lower_closed)
            {
                if prev.is_some() || c.lower.is_some() {
                    out.push(gap);
                }
            }
            prev = Some(c);
        }
        match prev {
            None => out.push(Interval::full()),
            Some(p) => {
                if p.upper.is_some() {
                    out.push(Interval {
                        lower: p.upper.clone(),
                        lower_closed: !p.upper_closed,
                        upper: None,
                        upper_closed: false,
                    });
                }
            }
        }
        IntervalSet { components: out }
    }

    /// Intersection, defined as the complement of the union of complements.
    pub fn intersection(&self, other: &IntervalSet) -> IntervalSet {
        self.complement().union(&other.complement()).complement()
    }

    pub fn difference(&self, other: &IntervalSet) -> IntervalSet {
        self.intersection(&other.complement())
    }

    pub fn symmetric_difference(&self, other: &IntervalSet) -> IntervalSet {
        self.difference(other).union(&other.difference(self))
    }

    pub fn is_subset(&self, other: &IntervalSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn shift(&self, d: &Rational) -> IntervalSet {
        if d.is_zero() {
            return self.clone();
        }
        IntervalSet {
            components: self.components.iter().map(|c| c.shift(d)).collect(),
        }
    }

    /// The components that can intersect `window`, located by binary search.
    pub fn overlapping(&self, window: &Interval) -> &[Interval] {
        let start = match window.lower() {
            None => 0,
            Some(l) => self
                .components
                .partition_point(|c| c.upper.as_ref().is_some_and(|u| u < l)),
        };
        let end = match window.upper() {
            None => self.components.len(),
            Some(u) => self
                .components
                .partition_point(|c| c.lower.as_ref().is_none_or(|lo| lo <= u)),
        };
        &self.components[start..end.max(start)]
    }

    /// `self ∩ window`, clipping each component.
    pub fn restrict(&self, window: &Interval) -> IntervalSet {
        IntervalSet {
            components: self
                .overlapping(window)
                .iter()
                .filter_map(|c| c.intersect(window))
                .collect(),
        }
    }

    /// Whether `self ∩ window` has at least `n` points; a component of
    /// positive length counts as infinitely many.
    pub fn cardinality_at_least(&self, window: &Interval, n: usize) -> bool {
        assert!(n >= 1, "point count threshold must be positive");
        let mut points = 0;
        for c in self.overlapping(window) {
            if let Some(part) = c.intersect(window) {
                if part.has_positive_length() {
                    return true;
                }
                points += 1;
                if points >= n {
                    return true;
                }
            }
        }
        false
    }

    pub fn meets(&self, window: &Interval) -> bool {
        self.overlapping(window)
            .iter()
            .any(|c| c.intersect(window).is_some())
    }

    /// All finite endpoints in ascending order, without repetition.
    pub fn endpoints(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::with_capacity(2 * self.components.len());
        for c in &self.components {
            for e in [&c.lower, &c.upper].into_iter().flatten() {
                if out.last() != Some(e) {
                    out.push(e.clone());
                }
            }
        }
        out
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::rat;

    fn set(text: &str) -> IntervalSet {
        crate::sets::parse_interval_list(text).unwrap()
    }

    #[test]
    fn normalize_merges_adjacent_components() {
        let s = IntervalSet::normalize([
            Interval::closed_open(rat(0, 1), rat(1, 1)),
            Interval::closed(rat(1, 1), rat(2, 1)),
        ]);
        assert_eq!(s, set("[0,2]"));
    }

    #[test]
    fn normalize_point_closes_open_end() {
        let s = IntervalSet::normalize([
            Interval::open(rat(0, 1), rat(1, 1)),
            Interval::point(rat(1, 1)),
        ]);
        assert_eq!(s, set("(0,1]"));
        assert_eq!(IntervalSet::normalize([]), IntervalSet::empty());
    }

    #[test]
    fn normalize_bridges_point_between_open_intervals() {
        let s = IntervalSet::normalize([
            Interval::open(rat(2, 1), rat(3, 1)),
            Interval::point(rat(2, 1)),
            Interval::open(rat(1, 1), rat(2, 1)),
        ]);
        assert_eq!(s, set("(1,3)"));
    }

    #[test]
    fn union_examples() {
        assert_eq!(set("[0,0]").union(&set("(0,1)")), set("[0,1)"));
        let neg = IntervalSet::from_interval(Interval::new(None, false, Some(rat(0, 1)), false).unwrap());
        let pos = IntervalSet::from_interval(Interval::new(Some(rat(0, 1)), false, None, false).unwrap());
        let u = neg.union(&pos);
        assert_eq!(u.len(), 2);
        assert!(!u.contains(&rat(0, 1)));
    }

    #[test]
    fn complement_examples() {
        assert!(IntervalSet::empty().complement().is_full());
        let c = set("[0,0]").complement();
        assert_eq!(c.to_string(), "(-inf,0),(0,inf)");
        assert_eq!(IntervalSet::full().complement(), IntervalSet::empty());
        assert_eq!(set("(0,1)").complement().to_string(), "(-inf,0],[1,inf)");
    }

    #[test]
    fn shift_examples() {
        assert_eq!(set("[0,1)").shift(&rat(1, 1)), set("[1,2)"));
    }

    #[test]
    fn malformed_intervals_are_rejected() {
        assert!(Interval::new(Some(rat(2, 1)), true, Some(rat(1, 1)), true).is_err());
        assert!(Interval::new(Some(rat(1, 1)), false, Some(rat(1, 1)), true).is_err());
        assert!(Interval::new(None, true, Some(rat(1, 1)), true).is_err());
    }

    #[test]
    fn cardinality_examples() {
        let window = Interval::open(rat(-1, 4), rat(3, 4));
        assert!(set("[0,0],[1/2,1/2]").cardinality_at_least(&window, 2));
        assert!(!set("[0,0],[1/2,1/2]").cardinality_at_least(&window, 3));
        let unit = Interval::open(rat(0, 1), rat(1, 1));
        assert!(set("(0,1)").cardinality_at_least(&unit, 5));
        assert!(!set("[0,0]").cardinality_at_least(&unit, 1));
    }

    #[test]
    fn binary_search_membership() {
        let s = set("[0,0],(1/2,1),[2,3]");
        assert!(s.contains(&rat(0, 1)));
        assert!(!s.contains(&rat(1, 2)));
        assert!(s.contains(&rat(3, 4)));
        assert!(!s.contains(&rat(1, 1)));
        assert!(s.contains(&rat(3, 1)));
        assert!(!s.contains(&rat(-1, 1)));
    }

    fn arb_interval() -> impl Strategy<Value = Interval> {
        // endpoints on a 1/6 grid in [-3,3], infinite ends now and then
        let end = prop_oneof![1 => Just(None), 6 => (-18i64..=18).prop_map(|k| Some(rat(k, 6)))];
        (end.clone(), any::<bool>(), end, any::<bool>()).prop_filter_map(
            "empty interval",
            |(lo, lc, hi, hc)| {
                let (lo, hi) = match (&lo, &hi) {
                    (Some(a), Some(b)) if a > b => (hi, lo),
                    _ => (lo, hi),
                };
                Interval::nonempty(lo, lc, hi, hc)
            },
        )
    }

    fn arb_set() -> impl Strategy<Value = IntervalSet> {
        prop::collection::vec(arb_interval(), 0..5).prop_map(IntervalSet::normalize)
    }

    fn probes() -> Vec<Rational> {
        (-40..=40).map(|k| rat(k, 12)).collect()
    }

    fn is_normal(s: &IntervalSet) -> bool {
        s.components().windows(2).all(|w| {
            let (a, b) = (&w[0], &w[1]);
            match (a.upper(), b.lower()) {
                (Some(u), Some(l)) => u < l || (u == l && !a.upper_closed() && !b.lower_closed()),
                _ => false,
            }
        })
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn operations_agree_with_membership(a in arb_set(), b in arb_set()) {
            let (u, i, d, c) = (a.union(&b), a.intersection(&b), a.difference(&b), a.complement());
            for s in [&u, &i, &d, &c] {
                prop_assert!(is_normal(s), "{}", s);
            }
            for x in probes() {
                let (p, q) = (a.contains(&x), b.contains(&x));
                prop_assert_eq!(u.contains(&x), p || q);
                prop_assert_eq!(i.contains(&x), p && q);
                prop_assert_eq!(d.contains(&x), p && !q);
                prop_assert_eq!(c.contains(&x), !p);
            }
        }

        #[test]
        fn boolean_laws(a in arb_set(), b in arb_set(), c in arb_set()) {
            prop_assert_eq!(a.complement().complement(), a.clone());
            prop_assert_eq!(a.union(&b).complement(), a.complement().intersection(&b.complement()));
            prop_assert_eq!(a.intersection(&b).complement(), a.complement().union(&b.complement()));
            prop_assert_eq!(a.union(&b), b.union(&a));
            prop_assert_eq!(a.union(&b).union(&c), a.union(&b.union(&c)));
            prop_assert_eq!(
                a.intersection(&b.union(&c)),
                a.intersection(&b).union(&a.intersection(&c))
            );
            prop_assert!(a.intersection(&b).is_subset(&a));
            prop_assert_eq!(IntervalSet::normalize(a.components().to_vec()), a);
        }

        #[test]
        fn shift_moves_membership(a in arb_set(), k in -12i64..=12) {
            let d = rat(k, 4);
            let moved = a.shift(&d);
            for x in probes() {
                prop_assert_eq!(moved.contains(&(&x + &d)), a.contains(&x));
            }
        }
    }
}
