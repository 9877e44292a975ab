//! Resistance between opposite corners of the unit-edge n-cube.
//!
//! Vertices at the same Hamming level are equipotential, so the network
//! collapses to a chain of `n` resistors: between levels `i` and `i + 1`
//! there are `(n - i) C(n, i)` parallel unit edges.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::coeff::{binomial, roman_coeff};
use crate::error::{Error, Result};
use crate::exact::{int, ratio};

/// Resistance of the `n`-cube in ohms, edges normalized to one ohm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResistanceResult {
    pub n: u32,
    #[serde(serialize_with = "serialize_rational")]
    pub ohms: BigRational,
}

fn serialize_rational<S: serde::Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::exact::render_rational(v))
}

/// `2^-n sum_{i=1..n} 2^i / i`.
pub fn resistance_direct(n: u32) -> ResistanceResult {
    let mut sum = BigRational::zero();
    let mut power = BigInt::one();
    for i in 1..=n {
        power *= 2;
        sum += BigRational::new(power.clone(), BigInt::from(i));
    }
    let scale = BigRational::new(BigInt::one(), BigInt::one() << n);
    ResistanceResult {
        n,
        ohms: sum * scale,
    }
}

/// `-sum_{i=-n..-1}` of the Roman coefficients `(-n-1 choose i)`.
pub fn resistance_via_roman(n: u32) -> Result<ResistanceResult> {
    if n == 0 {
        return Err(Error::Domain(
            "the Roman-coefficient sum needs n >= 1".into(),
        ));
    }
    let top = -i64::from(n) - 1;
    let sum = (-i64::from(n)..=-1).fold(BigRational::zero(), |acc, i| acc + roman_coeff(top, i));
    Ok(ResistanceResult { n, ohms: -sum })
}

/// Resistance between levels `i` and `i + 1`: `1 / ((n - i) C(n, i))`.
pub fn level_resistance(n: u32, i: i64) -> Result<BigRational> {
    let n = i64::from(n);
    if !(0..n).contains(&i) {
        return Err(Error::Domain(format!(
            "level {i} out of range for the {n}-cube (need 0 <= i < {n})"
        )));
    }
    Ok(BigRational::from_integer(binomial(n, i) * (n - i)).recip())
}

/// `2 R_n = R_{n-1} + 2/n`, checked exactly.
pub fn resistance_recurrence_check(n: u32) -> Result<bool> {
    if n == 0 {
        return Err(Error::Domain("the recurrence starts at n = 1".into()));
    }
    let lhs = int(2) * resistance_direct(n).ohms;
    let rhs = resistance_direct(n - 1).ohms + ratio(2, i64::from(n));
    Ok(lhs == rhs)
}

/// The level resistance written through a region-4 Roman coefficient:
/// `(-1)^(n+i+1) (i choose n)`.
pub fn level_resistance_via_roman(n: u32, i: i64) -> BigRational {
    let n = i64::from(n);
    crate::exact::neg_one_pow(n + i + 1) * roman_coeff(i, n)
}
