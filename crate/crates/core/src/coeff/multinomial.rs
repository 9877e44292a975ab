use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::EpsLaurent;
use crate::factorial::FactorialScheme;

/// A finite integer vector with its cached sum `|beta|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    entries: Vec<i64>,
    sum: i64,
}

impl MultiIndex {
    pub fn new(entries: Vec<i64>) -> Self {
        let sum = entries.iter().sum();
        Self { entries, sum }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn sum(&self) -> i64 {
        self.sum
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl From<Vec<i64>> for MultiIndex {
    fn from(entries: Vec<i64>) -> Self {
        Self::new(entries)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for MultiIndex {
    type Err = Error;

    /// Comma-separated integers, e.g. `2,2,-1`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("`{p}` in `{s}` is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(entries))
    }
}

/// `f(a) / prod f(beta_i)` when `|beta| = a`, zero otherwise.
pub fn multinomial_scheme(
    scheme: &FactorialScheme,
    a: i64,
    beta: &MultiIndex,
) -> Result<EpsLaurent> {
    if beta.sum() != a {
        return Ok(EpsLaurent::zero());
    }
    let mut denom = EpsLaurent::one();
    for &part in beta.entries() {
        denom = &denom * &scheme.factorial(part)?;
    }
    scheme.factorial(a)?.checked_div(&denom)
}

pub fn multinomial_roman(a: i64, beta: &MultiIndex) -> BigRational {
    multinomial_scheme(&FactorialScheme::Roman, a, beta)
        .expect("Roman factorials are nonzero constants")
        .coeff(0)
}

/// Multinomial Knuth coefficient. Its `e`-degree is never negative: a pole
/// would need `a < 0` with every part nonnegative, which forces `|beta| != a`.
pub fn multinomial_knuth(a: i64, beta: &MultiIndex) -> Result<EpsLaurent> {
    let value = multinomial_scheme(&FactorialScheme::Knuth, a, beta)?;
    match value.min_exponent() {
        Some(k) if k < 0 => Err(Error::Invariant(format!(
            "multinomial Knuth coefficient ({a}; {beta}) has a term of degree {k}"
        ))),
        _ => Ok(value),
    }
}

/// The `e -> 0` limit of [`multinomial_knuth`]; always an integer.
pub fn multinomial_gamma(a: i64, beta: &MultiIndex) -> Result<BigInt> {
    let limit = multinomial_knuth(a, beta)?.limit_at_zero()?;
    if !limit.is_integer() {
        return Err(Error::Invariant(format!(
            "multinomial Gamma coefficient ({a}; {beta}) = {limit} is not an integer"
        )));
    }
    Ok(limit.to_integer())
}
