use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The four field operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact rational arithmetic with a checked division.
pub fn rat_arith(a: &BigRational, b: &BigRational, op: ArithOp) -> Result<BigRational> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => {
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            a / b
        }
    })
}

/// `numer/denom` in canonical form. Panics on a zero denominator.
pub fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `(-1)^e` for any integer exponent.
pub fn neg_one_pow(e: i64) -> BigRational {
    if e.rem_euclid(2) == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// `base^exp` for a signed exponent; a negative power of zero is an error.
pub fn pow(base: &BigRational, exp: i64) -> Result<BigRational> {
    let magnitude = usize::try_from(exp.unsigned_abs())
        .map_err(|_| Error::Range(format!("exponent {exp} too large")))?;
    let p = num_traits::pow(base.clone(), magnitude);
    if exp >= 0 {
        Ok(p)
    } else if p.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(p.recip())
    }
}

/// Integers render bare ("24", "-1"); everything else as "p/q" with the sign
/// carried by the numerator.
pub fn render_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Inverse of [`render_rational`]. Accepts any "p" or "p/q" with `q != 0` and
/// returns the canonical value.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a rational number"));
    let (numer, denom) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(Error::Parse(format!("`{s}` has a zero denominator")));
    }
    Ok(BigRational::new(numer, denom))
}
