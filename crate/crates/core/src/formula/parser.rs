//! Recursive-descent parser. Precedence, loosest first: `->` (right),
//! `|`, `&`, `U`/`S` (right, one level), prefix `!`/`F1`/`O1`, then atoms,
//! constants, calls `C<n>(φ)` / `Pn<n>(φ, …)` and parentheses.

use thiserror::Error;

use super::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character `{found}` at byte {pos}")]
    Lexical { pos: usize, found: char },
    #[error("syntax error at byte {pos}: found {found}, expected one of {}", expected.join(", "))]
    Syntax {
        pos: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("arity error at byte {pos}: {msg}")]
    Arity { pos: usize, msg: String },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Lexical { pos, .. }
            | ParseError::Syntax { pos, .. }
            | ParseError::Arity { pos, .. } => *pos,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    Arrow,
    Until,
    Since,
    Future,
    Past,
    Count(String),
    Pnueli(String),
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("identifier `{name}`"),
            Tok::Count(n) => format!("`C{n}`"),
            Tok::Pnueli(n) => format!("`Pn{n}`"),
            Tok::End => "end of input".to_string(),
            other => format!("`{}`", other.spelling()),
        }
    }

    fn spelling(&self) -> &'static str {
        match self {
            Tok::True => "true",
            Tok::False => "false",
            Tok::Not => "!",
            Tok::And => "&",
            Tok::Or => "|",
            Tok::Arrow => "->",
            Tok::Until => "U",
            Tok::Since => "S",
            Tok::Future => "F1",
            Tok::Past => "O1",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Comma => ",",
            _ => "",
        }
    }
}

fn keyword(word: &str) -> Tok {
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    match word {
        "true" => Tok::True,
        "false" => Tok::False,
        "U" => Tok::Until,
        "S" => Tok::Since,
        "F1" => Tok::Future,
        "O1" => Tok::Past,
        _ => {
            if let Some(n) = word.strip_prefix("Pn").filter(|n| digits(n)) {
                Tok::Pnueli(n.to_string())
            } else if let Some(n) = word.strip_prefix('C').filter(|n| digits(n)) {
                Tok::Count(n.to_string())
            } else {
                Tok::Ident(word.to_string())
            }
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'!' => Some(Tok::Not),
            b'&' => Some(Tok::And),
            b'|' => Some(Tok::Or),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((start, tok));
            i += 1;
        } else if c == b'-' && bytes.get(i + 1) == Some(&b'>') {
            out.push((start, Tok::Arrow));
            i += 2;
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, keyword(&text[start..i])));
        } else {
            let found = text[start..].chars().next().unwrap_or('?');
            return Err(ParseError::Lexical { pos: start, found });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

const OPERAND_START: &[&str] = &[
    "`(`", "`!`", "`F1`", "`O1`", "`true`", "`false`", "identifier", "`C<n>`", "`Pn<n>`",
];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError::Syntax {
            pos: self.pos(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &[&str]) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.temporal()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.temporal()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn temporal(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.unary()?;
        match self.peek() {
            Tok::Until => {
                self.bump();
                Ok(Formula::until(lhs, self.temporal()?))
            }
            Tok::Since => {
                self.bump();
                Ok(Formula::since(lhs, self.temporal()?))
            }
            _ => Ok(lhs),
        }
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Future => {
                self.bump();
                Ok(Formula::diamond_future(self.unary()?))
            }
            Tok::Past => {
                self.bump();
                Ok(Formula::diamond_past(self.unary()?))
            }
            _ => self.primary(),
        }
    }

    fn arity(&self, digits: &str, pos: usize, what: &str) -> Result<usize, ParseError> {
        match digits.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(ParseError::Arity {
                pos,
                msg: format!("{what} index `{digits}` must be a positive integer"),
            }),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::True => {
                self.bump();
                Ok(Formula::True)
            }
            Tok::False => {
                self.bump();
                Ok(Formula::False)
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Atom(name))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.implication()?;
                self.expect(Tok::RParen, &["`)`", "`->`", "`|`", "`&`", "`U`", "`S`"])?;
                Ok(inner)
            }
            Tok::Count(digits) => {
                let n = self.arity(&digits, pos, "counting")?;
                self.bump();
                self.expect(Tok::LParen, &["`(`"])?;
                let inner = self.implication()?;
                self.expect(Tok::RParen, &["`)`", "`->`", "`|`", "`&`", "`U`", "`S`"])?;
                Ok(Formula::count(n, inner))
            }
            Tok::Pnueli(digits) => {
                let n = self.arity(&digits, pos, "Pnueli")?;
                self.bump();
                self.expect(Tok::LParen, &["`(`"])?;
                let mut args = vec![self.implication()?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    args.push(self.implication()?);
                }
                self.expect(
                    Tok::RParen,
                    &["`)`", "`,`", "`->`", "`|`", "`&`", "`U`", "`S`"],
                )?;
                if args.len() != n {
                    return Err(ParseError::Arity {
                        pos,
                        msg: format!("Pn{n} takes {n} arguments, found {}", args.len()),
                    });
                }
                Ok(Formula::pnueli(args))
            }
            _ => Err(self.error(OPERAND_START)),
        }
    }
}

pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let f = p.implication()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["end of input", "`->`", "`|`", "`&`", "`U`", "`S`"]));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(n: &str) -> Formula {
        Formula::atom(n)
    }

    #[test]
    fn parses_calls_and_associativity() {
        assert_eq!(parse("C2(P)").unwrap(), Formula::count(2, atom("P")));
        assert_eq!(
            parse("P U Q S R").unwrap(),
            Formula::until(atom("P"), Formula::since(atom("Q"), atom("R")))
        );
        assert_eq!(
            parse("P -> Q -> R").unwrap(),
            Formula::implies(atom("P"), Formula::implies(atom("Q"), atom("R")))
        );
        assert_eq!(
            parse("P | Q & R").unwrap(),
            Formula::or(atom("P"), Formula::and(atom("Q"), atom("R")))
        );
        assert_eq!(
            parse("!P U F1 Q").unwrap(),
            Formula::until(Formula::not(atom("P")), Formula::diamond_future(atom("Q")))
        );
        assert_eq!(
            parse("Pn2(P, !P)").unwrap(),
            Formula::pnueli(vec![atom("P"), Formula::not(atom("P"))])
        );
    }

    #[test]
    fn arity_errors() {
        assert!(matches!(parse("C0(P)"), Err(ParseError::Arity { pos: 0, .. })));
        assert!(matches!(parse("Pn0(P)"), Err(ParseError::Arity { .. })));
        assert!(matches!(parse("Pn2(P)"), Err(ParseError::Arity { .. })));
        assert!(matches!(parse("Pn1(P, Q)"), Err(ParseError::Arity { .. })));
    }

    #[test]
    fn syntax_errors_carry_position_and_expectations() {
        match parse("P & ") {
            Err(ParseError::Syntax { pos, expected, found }) => {
                assert_eq!(pos, 4);
                assert_eq!(found, "end of input");
                assert!(expected.contains(&"identifier".to_string()));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("(P"), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse("P Q"), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse("C2 P"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("P $ Q"), Err(ParseError::Lexical { pos: 2, found: '$' })));
        assert!(matches!(parse("P - Q"), Err(ParseError::Lexical { pos: 2, .. })));
    }

    #[test]
    fn identifiers_that_look_like_keywords() {
        assert_eq!(parse("C").unwrap(), atom("C"));
        assert_eq!(parse("Pn").unwrap(), atom("Pn"));
        assert_eq!(parse("C2x").unwrap(), atom("C2x"));
        assert_eq!(parse("Until").unwrap(), atom("Until"));
    }
}
