use std::fmt;

use super::Formula;

// binding strength, loosest first
const IMPLIES: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const TEMPORAL: u8 = 4;
const UNARY: u8 = 5;
const ATOMIC: u8 = 6;

fn level(f: &Formula) -> u8 {
    match f {
        Formula::Implies(..) => IMPLIES,
        Formula::Or(..) => OR,
        Formula::And(..) => AND,
        Formula::Until(..) | Formula::Since(..) => TEMPORAL,
        Formula::Not(_) | Formula::DiamondFuture(_) | Formula::DiamondPast(_) => UNARY,
        _ => ATOMIC,
    }
}

fn write_at(f: &Formula, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if level(f) < min {
        write!(out, "(")?;
        write_formula(f, out)?;
        write!(out, ")")
    } else {
        write_formula(f, out)
    }
}

fn write_binary(
    a: &Formula,
    op: &str,
    b: &Formula,
    left: u8,
    right: u8,
    out: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    write_at(a, left, out)?;
    write!(out, " {op} ")?;
    write_at(b, right, out)
}

fn write_formula(f: &Formula, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    match f {
        Formula::True => write!(out, "true"),
        Formula::False => write!(out, "false"),
        Formula::Atom(name) => write!(out, "{name}"),
        Formula::Not(a) => {
            write!(out, "!")?;
            write_at(a, UNARY, out)
        }
        Formula::DiamondFuture(a) => {
            write!(out, "F1 ")?;
            write_at(a, UNARY, out)
        }
        Formula::DiamondPast(a) => {
            write!(out, "O1 ")?;
            write_at(a, UNARY, out)
        }
        // -> is right-associative, | and & left-associative, U and S right-associative
        Formula::Implies(a, b) => write_binary(a, "->", b, OR, IMPLIES, out),
        Formula::Or(a, b) => write_binary(a, "|", b, OR, AND, out),
        Formula::And(a, b) => write_binary(a, "&", b, AND, TEMPORAL, out),
        Formula::Until(a, b) => write_binary(a, "U", b, UNARY, TEMPORAL, out),
        Formula::Since(a, b) => write_binary(a, "S", b, UNARY, TEMPORAL, out),
        Formula::Count(n, a) => {
            write!(out, "C{n}(")?;
            write_formula(a, out)?;
            write!(out, ")")
        }
        Formula::Pnueli(args) => {
            write!(out, "Pn{}(", args.len())?;
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    write!(out, ", ")?;
                }
                write_formula(a, out)?;
            }
            write!(out, ")")
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::atom("P")
    }
    fn q() -> Formula {
        Formula::atom("Q")
    }
    fn r() -> Formula {
        Formula::atom("R")
    }

    #[test]
    fn printing_examples() {
        assert_eq!(Formula::count(2, p()).to_string(), "C2(P)");
        assert_eq!(
            Formula::until(p(), Formula::since(q(), r())).to_string(),
            "P U Q S R"
        );
        assert_eq!(Formula::not(Formula::until(p(), q())).to_string(), "!(P U Q)");
        assert_eq!(
            Formula::until(Formula::until(p(), q()), r()).to_string(),
            "(P U Q) U R"
        );
        assert_eq!(
            Formula::diamond_future(Formula::until(p(), q())).to_string(),
            "F1 (P U Q)"
        );
        assert_eq!(
            Formula::pnueli(vec![p(), Formula::not(p())]).to_string(),
            "Pn2(P, !P)"
        );
        assert_eq!(
            Formula::implies(Formula::implies(p(), q()), r()).to_string(),
            "(P -> Q) -> R"
        );
        assert_eq!(
            Formula::or(p(), Formula::or(q(), r())).to_string(),
            "P | (Q | R)"
        );
    }
}
