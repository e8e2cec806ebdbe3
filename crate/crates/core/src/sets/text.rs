//! Text syntax for rationals and intervals: `p/q` or integers with an
//! optional leading `-`; intervals `[a,b]`, `(a,b)`, `[a,b)`, `(a,b]`;
//! comma-separated lists with `{}` for the empty list. `-inf` and `inf`
//! are accepted as open infinite endpoints.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Interval, IntervalSet, Rational, SetError};

pub fn parse_rational(text: &str) -> Result<Rational, SetError> {
    let t = text.trim();
    let bad = || SetError::InvalidRational(text.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let digits = |s: &str, allow_sign: bool| {
        let body = if allow_sign {
            s.strip_prefix('-').unwrap_or(s)
        } else {
            s
        };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(num, true) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) if digits(d, false) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::from(1),
    };
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

struct Scanner<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn err(&self, msg: impl Into<String>) -> SetError {
        SetError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SetError> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(self.err(format!("expected `{c}`, found `{x}`"))),
            None => Err(self.err(format!("expected `{c}`, found end of input"))),
        }
    }

    /// Reads an endpoint token; `None` means an infinite endpoint.
    fn endpoint(&mut self) -> Result<Option<Rational>, SetError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '/' || c == '-' || c == '+'))
            .unwrap_or(rest.len());
        let token = &rest[..len];
        self.pos += len;
        match token {
            "inf" | "+inf" | "-inf" => Ok(None),
            _ => parse_rational(token)
                .map(Some)
                .map_err(|_| SetError::Syntax {
                    pos: start,
                    msg: format!("invalid rational `{token}`"),
                }),
        }
    }

    fn interval(&mut self) -> Result<Interval, SetError> {
        let lower_closed = match self.peek() {
            Some('[') => true,
            Some('(') => false,
            _ => return Err(self.err("expected `[` or `(`")),
        };
        self.pos += 1;
        let lower = self.endpoint()?;
        self.expect(',')?;
        let upper = self.endpoint()?;
        let upper_closed = match self.peek() {
            Some(']') => true,
            Some(')') => false,
            _ => return Err(self.err("expected `]` or `)`")),
        };
        self.pos += 1;
        Interval::new(lower, lower_closed, upper, upper_closed)
    }
}

pub fn parse_interval(text: &str) -> Result<Interval, SetError> {
    let mut s = Scanner { text, pos: 0 };
    let i = s.interval()?;
    if s.peek().is_some() {
        return Err(s.err("trailing input after interval"));
    }
    Ok(i)
}

/// Parses a comma-separated interval list and normalizes it.
pub fn parse_interval_list(text: &str) -> Result<IntervalSet, SetError> {
    let mut s = Scanner { text, pos: 0 };
    if s.peek() == Some('{') {
        s.pos += 1;
        s.expect('}')?;
        if s.peek().is_some() {
            return Err(s.err("trailing input after `{}`"));
        }
        return Ok(IntervalSet::empty());
    }
    let mut raw = vec![s.interval()?];
    while s.peek().is_some() {
        s.expect(',')?;
        raw.push(s.interval()?);
    }
    Ok(IntervalSet::normalize(raw))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::rat;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-3").unwrap(), rat(-3, 1));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn lists() {
        let s = parse_interval_list(" [0,0] , (1/3, 2/3),[1,2)").unwrap();
        assert_eq!(s.to_string(), "[0,0],(1/3,2/3),[1,2)");
        assert!(parse_interval_list("{}").unwrap().is_empty());
        assert!(parse_interval_list("[0,1").is_err());
        assert!(parse_interval_list("[1,0]").is_err());
        assert!(parse_interval_list("(1,1)").is_err());
        assert_eq!(
            parse_interval_list("(-inf,0)").unwrap().to_string(),
            "(-inf,0)"
        );
    }
}
