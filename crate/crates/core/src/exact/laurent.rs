use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::rational::{parse_rational, pow, render_rational, ArithOp};
use crate::error::{Error, Result};

/// A finite Laurent polynomial `sum c_k e^k` in a formal infinitesimal `e`.
///
/// Exponents may be negative; `e^-1` plays the role of `omega = 1/e`. Zero
/// coefficients are never stored, so structural equality is value equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EpsLaurent {
    terms: BTreeMap<i64, BigRational>,
}

impl EpsLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * e^exp`; a zero coefficient yields the zero polynomial.
    pub fn monomial(c: BigRational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// The infinitesimal `e`.
    pub fn eps() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    /// `omega = e^-1`.
    pub fn omega() -> Self {
        Self::monomial(BigRational::one(), -1)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(pairs: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in pairs {
            out.add_term(k, c);
        }
        out
    }

    fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms
            .get(&exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `Some((c, k))` when the value is exactly `c * e^k` with `c != 0`.
    pub fn as_monomial(&self) -> Option<(&BigRational, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (c, *k))
        } else {
            None
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, c * factor)).collect(),
        }
    }

    /// Multiplies by `e^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k + shift, c.clone()))
                .collect(),
        }
    }

    /// Division by a monomial `c * e^k`. Every factorial-quotient denominator
    /// in this crate is a product of monomials, so this is all that is needed.
    pub fn checked_div(&self, divisor: &EpsLaurent) -> Result<EpsLaurent> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (c, k) = divisor
            .as_monomial()
            .ok_or_else(|| Error::NonMonomialDivisor(divisor.to_string()))?;
        Ok(self.scale(&c.recip()).shift(-k))
    }

    /// The value as `e -> 0`: the constant term, provided no pole is present.
    pub fn limit_at_zero(&self) -> Result<BigRational> {
        match self.min_exponent() {
            Some(k) if k < 0 => Err(Error::Divergent(k)),
            _ => Ok(self.coeff(0)),
        }
    }

    /// Evaluates the polynomial at `e = value`.
    pub fn substitute(&self, value: &BigRational) -> Result<BigRational> {
        if value.is_zero() {
            if let Some(k) = self.min_exponent().filter(|k| *k < 0) {
                return Err(Error::Domain(format!(
                    "cannot substitute e = 0 into a term of degree {k}"
                )));
            }
        }
        let mut acc = BigRational::zero();
        for (k, c) in self.terms() {
            acc += c * pow(value, k)?;
        }
        Ok(acc)
    }
}

/// The four operations on Laurent polynomials; division needs a monomial divisor.
pub fn eps_arith(a: &EpsLaurent, b: &EpsLaurent, op: ArithOp) -> Result<EpsLaurent> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl From<BigRational> for EpsLaurent {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a EpsLaurent> for &'a EpsLaurent {
    type Output = EpsLaurent;

    fn add(self, rhs: &EpsLaurent) -> EpsLaurent {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a EpsLaurent> for &'a EpsLaurent {
    type Output = EpsLaurent;

    fn sub(self, rhs: &EpsLaurent) -> EpsLaurent {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a EpsLaurent> for &'a EpsLaurent {
    type Output = EpsLaurent;

    fn mul(self, rhs: &EpsLaurent) -> EpsLaurent {
        let mut out = EpsLaurent::zero();
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

impl Neg for &EpsLaurent {
    type Output = EpsLaurent;

    fn neg(self) -> EpsLaurent {
        EpsLaurent {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<EpsLaurent> for EpsLaurent {
            type Output = EpsLaurent;
            fn $method(self, rhs: EpsLaurent) -> EpsLaurent {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for EpsLaurent {
    type Output = EpsLaurent;

    fn neg(self) -> EpsLaurent {
        -&self
    }
}

/// Terms joined by " + " in increasing exponent: "c" for degree 0, "c*e"
/// for degree 1, "c*e^k" otherwise. Zero renders as "0".
impl fmt::Display for EpsLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let c = render_rational(c);
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*e")?,
                _ => write!(f, "{c}*e^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for EpsLaurent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        for term in s.split(" + ") {
            let term = term.trim();
            let (coeff, exp) = if let Some((c, k)) = term.split_once("*e^") {
                let k = k
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))?;
                (c, k)
            } else if let Some(c) = term.strip_suffix("*e") {
                (c, 1)
            } else {
                (term, 0)
            };
            out.add_term(exp, parse_rational(coeff)?);
        }
        Ok(out)
    }
}
