//! Formulas of TL(U,S) extended with the unit-window modalities `F1`/`O1`,
//! the counting modalities `C<n>` and the Pnueli modalities `Pn<n>`.

mod parser;
mod print;

pub use parser::{parse, ParseError};

use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    True,
    False,
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    /// Strict, non-matching until.
    Until(Box<Formula>, Box<Formula>),
    /// Strict, non-matching since.
    Since(Box<Formula>, Box<Formula>),
    /// Holds somewhere in the open window `(t, t+1)`.
    DiamondFuture(Box<Formula>),
    /// Holds somewhere in the open window `(t-1, t)`.
    DiamondPast(Box<Formula>),
    /// Holds at `n ≥ 1` distinct points of `(t, t+1)`.
    Count(usize, Box<Formula>),
    /// Strictly increasing witnesses `t < t_1 < … < t_n < t+1` with the
    /// i-th argument holding at `t_i`.
    Pnueli(Vec<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn until(a: Formula, b: Formula) -> Formula {
        Formula::Until(Box::new(a), Box::new(b))
    }

    pub fn since(a: Formula, b: Formula) -> Formula {
        Formula::Since(Box::new(a), Box::new(b))
    }

    pub fn diamond_future(f: Formula) -> Formula {
        Formula::DiamondFuture(Box::new(f))
    }

    pub fn diamond_past(f: Formula) -> Formula {
        Formula::DiamondPast(Box::new(f))
    }

    /// Panics if `n == 0`.
    pub fn count(n: usize, f: Formula) -> Formula {
        assert!(n >= 1, "counting threshold must be at least 1");
        Formula::Count(n, Box::new(f))
    }

    /// Panics on an empty argument list.
    pub fn pnueli(args: Vec<Formula>) -> Formula {
        assert!(!args.is_empty(), "Pnueli modality needs at least one argument");
        Formula::Pnueli(args)
    }

    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => Vec::new(),
            Formula::Not(a)
            | Formula::DiamondFuture(a)
            | Formula::DiamondPast(a)
            | Formula::Count(_, a) => vec![a],
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Until(a, b)
            | Formula::Since(a, b) => vec![a, b],
            Formula::Pnueli(args) => args.iter().collect(),
        }
    }

    pub fn is_modal(&self) -> bool {
        matches!(
            self,
            Formula::Until(..)
                | Formula::Since(..)
                | Formula::DiamondFuture(_)
                | Formula::DiamondPast(_)
                | Formula::Count(..)
                | Formula::Pnueli(_)
        )
    }

    /// Whether the operator looks through a unit-length window.
    pub fn is_metric(&self) -> bool {
        matches!(
            self,
            Formula::DiamondFuture(_)
                | Formula::DiamondPast(_)
                | Formula::Count(..)
                | Formula::Pnueli(_)
        )
    }

    /// Maximal nesting of modalities; boolean connectives count 0.
    pub fn modal_depth(&self) -> usize {
        let inner = self.children().iter().map(|c| c.modal_depth()).max().unwrap_or(0);
        inner + usize::from(self.is_modal())
    }

    /// Maximal nesting of unit-window modalities only.
    pub fn metric_depth(&self) -> usize {
        let inner = self.children().iter().map(|c| c.metric_depth()).max().unwrap_or(0);
        inner + usize::from(self.is_metric())
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        if let Formula::Atom(name) = self {
            out.insert(name.clone());
        }
        for c in self.children() {
            c.collect_atoms(out);
        }
    }

    /// `(modal depth, atom names)`.
    pub fn metrics(&self) -> (usize, BTreeSet<String>) {
        (self.modal_depth(), self.atoms())
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metrics_examples() {
        let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
        assert_eq!(parse("P").unwrap().metrics(), (0, names(&["P"])));
        assert_eq!(parse("F1 (P U Q)").unwrap().metrics(), (2, names(&["P", "Q"])));
        assert_eq!(parse("C3(P) & O1 P").unwrap().metrics(), (1, names(&["P"])));
        assert_eq!(parse("Pn2(F1 P, P U Q)").unwrap().modal_depth(), 2);
        assert_eq!(parse("F1 (P U F1 Q)").unwrap().metric_depth(), 2);
    }

    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use crate::gen::{random_formula, FormulaShape};

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn print_then_parse_is_identity(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let shape = FormulaShape { max_depth: 4, ..FormulaShape::default() };
            let f = random_formula(&mut rng, &["P", "Q", "R2"], &shape);
            let printed = f.to_string();
            prop_assert_eq!(parse(&printed).unwrap(), f.clone(), "{}", printed);
            prop_assert!(f.modal_depth() <= 4);
        }
    }
}
