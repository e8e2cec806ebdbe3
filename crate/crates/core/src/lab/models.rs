use std::fmt;
use std::str::FromStr;

use crate::eval::Env;
use crate::sets::{rat, Interval, IntervalSet};
use crate::signal::{Signal, TimeDomain};

use super::LabError;

/// The single-predicate models used by the separation checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelSpec {
    /// Full line, `P` at every multiple of `1/k`.
    Mk(u32),
    /// Half line, `P` at every multiple of `2/3`.
    Thm2,
    /// Half line, `P` at every multiple of `2/(2n-1)`.
    Thm3(u32),
}

impl ModelSpec {
    fn validate(self) -> Result<Self, LabError> {
        match self {
            ModelSpec::Mk(0) => Err(LabError::InvalidParameter("mk:k needs k >= 1".into())),
            ModelSpec::Thm3(n) if n < 2 => {
                Err(LabError::InvalidParameter("thm3:n needs n >= 2".into()))
            }
            ok => Ok(ok),
        }
    }

    pub fn signal(self) -> Result<Signal, LabError> {
        let (domain, period) = match self.validate()? {
            ModelSpec::Mk(k) => (TimeDomain::FullLine, rat(1, k as i64)),
            ModelSpec::Thm2 => (TimeDomain::HalfLine, rat(2, 3)),
            ModelSpec::Thm3(n) => (TimeDomain::HalfLine, rat(2, 2 * n as i64 - 1)),
        };
        let pattern = IntervalSet::from_interval(Interval::point(rat(0, 1)));
        Ok(Signal::periodic(domain, period, pattern)?)
    }
}

/// An environment binding `P` to the model's predicate.
pub fn builtin_model(spec: ModelSpec) -> Result<Env, LabError> {
    let p = spec.signal()?;
    Ok(Env::new(p.domain()).with("P", p)?)
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpec::Mk(k) => write!(f, "mk:{k}"),
            ModelSpec::Thm2 => write!(f, "thm2"),
            ModelSpec::Thm3(n) => write!(f, "thm3:{n}"),
        }
    }
}

fn parameter(text: &str, what: &str) -> Result<u32, LabError> {
    text.parse()
        .map_err(|_| LabError::InvalidParameter(format!("{what}: `{text}` is not a number")))
}

impl FromStr for ModelSpec {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, LabError> {
        let spec = match s.split_once(':') {
            None if s == "thm2" => ModelSpec::Thm2,
            Some(("mk", k)) => ModelSpec::Mk(parameter(k, "mk")?),
            Some(("thm3", n)) => ModelSpec::Thm3(parameter(n, "thm3")?),
            _ => {
                return Err(LabError::InvalidParameter(format!(
                    "unknown model `{s}` (expected mk:<k>, thm2 or thm3:<n>)"
                )))
            }
        };
        spec.validate()
    }
}
