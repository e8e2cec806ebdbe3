//! Line-oriented signal files:
//!
//! ```text
//! domain line|halfline
//! period <rational>
//! pattern <interval-list>
//! transient <rational>    # halfline only, default 0
//! prefix <interval-list>  # default {}
//! ```

use std::collections::BTreeMap;
use std::fmt::Write;

use num_traits::Zero;

use super::{Signal, SignalError, TimeDomain};
use crate::sets::{parse_interval_list, parse_rational, IntervalSet, Rational};

const KEYS: [&str; 5] = ["domain", "period", "pattern", "transient", "prefix"];

pub fn parse_signal_file(text: &str) -> Result<Signal, SignalError> {
    let mut fields: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once(char::is_whitespace)
            .map(|(k, v)| (k, v.trim()))
            .unwrap_or((content, ""));
        if !KEYS.contains(&key) {
            return Err(SignalError::File {
                line,
                msg: format!("unknown key `{key}`"),
            });
        }
        if fields.insert(key, (line, value)).is_some() {
            return Err(SignalError::File {
                line,
                msg: format!("duplicate key `{key}`"),
            });
        }
    }
    let at = |key: &str| fields.get(key).map(|(l, _)| *l).unwrap_or(0);
    let required = |key: &str| {
        fields
            .get(key)
            .map(|(_, v)| *v)
            .ok_or_else(|| SignalError::File {
                line: 0,
                msg: format!("missing key `{key}`"),
            })
    };
    let wrap = |key: &str| {
        let line = at(key);
        move |e: crate::sets::SetError| SignalError::File {
            line,
            msg: e.to_string(),
        }
    };

    let domain = match required("domain")? {
        "line" => TimeDomain::FullLine,
        "halfline" => TimeDomain::HalfLine,
        other => {
            return Err(SignalError::File {
                line: at("domain"),
                msg: format!("unknown domain `{other}`"),
            })
        }
    };
    let period = parse_rational(required("period")?).map_err(wrap("period"))?;
    let pattern = parse_interval_list(required("pattern")?).map_err(wrap("pattern"))?;
    let transient = match fields.get("transient") {
        Some((_, v)) => parse_rational(v).map_err(wrap("transient"))?,
        None => Rational::zero(),
    };
    let prefix = match fields.get("prefix") {
        Some((_, v)) => parse_interval_list(v).map_err(wrap("prefix"))?,
        None => IntervalSet::empty(),
    };
    Signal::new(domain, transient, prefix, period, pattern)
}

pub(super) fn emit(s: &Signal) -> String {
    let mut out = String::new();
    writeln!(out, "domain {}", s.domain.keyword()).unwrap();
    writeln!(out, "period {}", s.period).unwrap();
    writeln!(out, "pattern {}", s.pattern).unwrap();
    if s.domain == TimeDomain::HalfLine {
        writeln!(out, "transient {}", s.transient).unwrap();
        writeln!(out, "prefix {}", s.prefix).unwrap();
    }
    out
}
