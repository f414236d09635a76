use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Rational;

/// A knot invariant given by a formula in Conway coefficients and `v_2`.
///
/// Text form: `c4` (Conway coefficient), `v2`, `v2^3` (pointwise power),
/// `const:3/2`, and products joined by `*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum InvariantSpec {
    Conway(usize),
    V2,
    V2Power(usize),
    Constant(Rational),
    Product(Vec<InvariantSpec>),
}

impl InvariantSpec {
    pub fn order(&self) -> usize {
        match self {
            InvariantSpec::Conway(m) => *m,
            InvariantSpec::V2 => 2,
            InvariantSpec::V2Power(k) => 2 * k,
            InvariantSpec::Constant(_) => 0,
            InvariantSpec::Product(fs) => fs.iter().map(InvariantSpec::order).sum(),
        }
    }

    /// Conway coefficients, `v_2` and its powers satisfy the mirror sign law.
    pub fn is_canonical(&self) -> bool {
        matches!(self, InvariantSpec::Conway(_) | InvariantSpec::V2 | InvariantSpec::V2Power(_))
    }
}

impl fmt::Display for InvariantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantSpec::Conway(m) => write!(f, "c{m}"),
            InvariantSpec::V2 => write!(f, "v2"),
            InvariantSpec::V2Power(k) => write!(f, "v2^{k}"),
            InvariantSpec::Constant(c) => write!(f, "const:{c}"),
            InvariantSpec::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|s| s.to_string()).collect();
                write!(f, "{}", parts.join("*"))
            }
        }
    }
}

fn parse_atom(s: &str) -> Result<InvariantSpec> {
    let bad = || Error::Parse { position: 0, message: format!("unknown invariant {s:?}") };
    let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
    if s == "v2" {
        return Ok(InvariantSpec::V2);
    }
    if let Some(k) = s.strip_prefix("v2^") {
        return Ok(InvariantSpec::V2Power(num(k)?));
    }
    if let Some(c) = s.strip_prefix("const:") {
        return c.parse::<Rational>().map(InvariantSpec::Constant).map_err(|_| bad());
    }
    if let Some(m) = s.strip_prefix("conway_coefficient(").and_then(|r| r.strip_suffix(')')) {
        return Ok(InvariantSpec::Conway(num(m)?));
    }
    if let Some(k) = s.strip_prefix("v2_power(").and_then(|r| r.strip_suffix(')')) {
        return Ok(InvariantSpec::V2Power(num(k)?));
    }
    if let Some(m) = s.strip_prefix('c') {
        return Ok(InvariantSpec::Conway(num(m)?));
    }
    Err(bad())
}

impl FromStr for InvariantSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('*').map(str::trim).collect();
        if parts.len() == 1 {
            return parse_atom(parts[0]);
        }
        Ok(InvariantSpec::Product(parts.into_iter().map(parse_atom).collect::<Result<_>>()?))
    }
}

impl From<InvariantSpec> for String {
    fn from(s: InvariantSpec) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for InvariantSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}
