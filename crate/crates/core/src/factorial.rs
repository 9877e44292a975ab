//! Generalized factorials: Roman, Knuth (formal `e`), trivial, and the
//! q-analog, plus a floating-point Roman factorial for real arguments.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{neg_one_pow, parse_rational, pow, render_rational, EpsLaurent};
use crate::gamma::gamma;

/// Classical `n!`.
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// The Roman bracket: `a` itself, except that the bracket of zero is one.
pub fn roman_bracket(a: &BigRational) -> BigRational {
    if a.is_zero() {
        BigRational::one()
    } else {
        a.clone()
    }
}

pub fn roman_bracket_int(n: i64) -> i64 {
    if n == 0 {
        1
    } else {
        n
    }
}

/// `n!` for `n >= 0` and `(-1)^(n+1) / (-n-1)!` for negative `n`. Never zero.
pub fn roman_factorial(n: i64) -> BigRational {
    if n >= 0 {
        BigRational::from_integer(factorial(n as u64))
    } else {
        let m = n.unsigned_abs() - 1;
        neg_one_pow(n + 1) / BigRational::from_integer(factorial(m))
    }
}

/// Leading term of `Gamma(n + 1 + e)`: `n!` for `n >= 0`, and
/// `(-1)^(n-1) omega / (-n-1)!` for negative `n`.
pub fn knuth_factorial(n: i64) -> EpsLaurent {
    if n >= 0 {
        EpsLaurent::constant(BigRational::from_integer(factorial(n as u64)))
    } else {
        let m = n.unsigned_abs() - 1;
        let c = neg_one_pow(n - 1) / BigRational::from_integer(factorial(m));
        EpsLaurent::monomial(c, -1)
    }
}

pub fn trivial_factorial(_n: i64) -> BigRational {
    BigRational::one()
}

fn check_q(q: &BigRational) -> Result<()> {
    if q.is_zero() || q.is_one() {
        Err(Error::Domain(format!(
            "q = {} is not allowed (q must differ from 0 and 1)",
            render_rational(q)
        )))
    } else {
        Ok(())
    }
}

/// `(q^[n] - 1)/(q - 1)` where `[n]` is the Roman bracket of `n`.
pub fn q_bracket(n: i64, q: &BigRational) -> Result<BigRational> {
    check_q(q)?;
    let top = pow(q, roman_bracket_int(n))? - BigRational::one();
    Ok(top / (q - BigRational::one()))
}

/// The q-factorial fixed by `f(0) = 1` and `f(n) / f(n-1) = q_bracket(n)`.
///
/// For negative `n` this inverts the recursion, so every bracket in
/// `n+1 ..= 0` must be nonzero.
pub fn q_factorial(n: i64, q: &BigRational) -> Result<BigRational> {
    check_q(q)?;
    if n >= 0 {
        let mut acc = BigRational::one();
        for m in 1..=n {
            acc *= q_bracket(m, q)?;
        }
        Ok(acc)
    } else {
        let mut denom = BigRational::one();
        for m in (n + 1)..=0 {
            let b = q_bracket(m, q)?;
            if b.is_zero() {
                return Err(Error::Domain(format!(
                    "q = {} is a root of unity: bracket of {m} vanishes",
                    render_rational(q)
                )));
            }
            denom *= b;
        }
        Ok(denom.recip())
    }
}

/// Which factorial a coefficient is built from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FactorialScheme {
    Roman,
    /// Factorials carry the formal infinitesimal `e`.
    Knuth,
    /// Every factorial equals one.
    Trivial,
    /// q-analog built on `q_bracket`; `q` must not be 0 or 1.
    Q(BigRational),
}

impl FactorialScheme {
    pub fn q(q: BigRational) -> Result<Self> {
        check_q(&q)?;
        Ok(Self::Q(q))
    }

    pub fn factorial(&self, n: i64) -> Result<EpsLaurent> {
        scheme_factorial(self, n)
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

/// Factorial under any scheme; rational-valued schemes embed as constants.
pub fn scheme_factorial(scheme: &FactorialScheme, n: i64) -> Result<EpsLaurent> {
    Ok(match scheme {
        FactorialScheme::Roman => EpsLaurent::constant(roman_factorial(n)),
        FactorialScheme::Knuth => knuth_factorial(n),
        FactorialScheme::Trivial => EpsLaurent::constant(trivial_factorial(n)),
        FactorialScheme::Q(q) => EpsLaurent::constant(q_factorial(n, q)?),
    })
}

impl fmt::Display for FactorialScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorialScheme::Roman => f.write_str("roman"),
            FactorialScheme::Knuth => f.write_str("knuth"),
            FactorialScheme::Trivial => f.write_str("trivial"),
            FactorialScheme::Q(q) => write!(f, "q:{}", render_rational(q)),
        }
    }
}

impl FromStr for FactorialScheme {
    type Err = Error;

    /// `roman`, `knuth`, `trivial` or `q:<rational>`. A syntactically valid
    /// but forbidden `q` is a domain error, not a parse error.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "roman" => Ok(Self::Roman),
            "knuth" => Ok(Self::Knuth),
            "trivial" => Ok(Self::Trivial),
            _ => match s.strip_prefix("q:") {
                Some(q) => Self::q(parse_rational(q)?),
                None => Err(Error::Parse(format!("unknown factorial scheme `{s}`"))),
            },
        }
    }
}

/// Largest `|a|` accepted by [`roman_factorial_real`].
pub const REAL_ARGUMENT_LIMIT: f64 = 170.0;

/// Roman factorial of a real number: `Gamma(a + 1)`, except at negative
/// integers where the exact Roman value is used.
pub fn roman_factorial_real(a: f64) -> Result<f64> {
    if !a.is_finite() {
        return Err(Error::Domain(format!("argument {a} is not finite")));
    }
    if a.abs() > REAL_ARGUMENT_LIMIT {
        return Err(Error::Range(format!(
            "|a| = {} exceeds {REAL_ARGUMENT_LIMIT}",
            a.abs()
        )));
    }
    if a < 0.0 && a.fract() == 0.0 {
        let exact = roman_factorial(a as i64);
        return exact
            .to_f64()
            .ok_or_else(|| Error::Range(format!("{a}! not representable")));
    }
    let value = gamma(a + 1.0);
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Range(format!("Gamma({}) overflows", a + 1.0)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn bracket() {
        assert_eq!(roman_bracket(&int(0)), int(1));
        assert_eq!(roman_bracket(&int(5)), int(5));
        assert_eq!(roman_bracket(&int(-3)), int(-3));
        assert_eq!(roman_bracket(&ratio(1, 2)), ratio(1, 2));
    }

    #[test]
    fn roman_factorial_table() {
        let expected = [
            (-6, ratio(-1, 120)),
            (-5, ratio(1, 24)),
            (-4, ratio(-1, 6)),
            (-3, ratio(1, 2)),
            (-2, int(-1)),
            (-1, int(1)),
            (0, int(1)),
            (1, int(1)),
            (2, int(2)),
            (3, int(6)),
            (4, int(24)),
            (5, int(120)),
            (6, int(720)),
        ];
        for (n, v) in expected {
            assert_eq!(roman_factorial(n), v, "n = {n}");
        }
    }

    #[test]
    fn knuth_factorial_examples() {
        assert_eq!(knuth_factorial(3), EpsLaurent::constant(int(6)));
        assert_eq!(knuth_factorial(-1), EpsLaurent::omega());
        assert_eq!(knuth_factorial(-3), EpsLaurent::monomial(ratio(1, 2), -1));
        assert_eq!(knuth_factorial(-2), EpsLaurent::monomial(int(-1), -1));
    }

    #[test]
    fn trivial() {
        for n in [-4, 0, 7] {
            assert_eq!(trivial_factorial(n), int(1));
        }
    }

    // f(n-1) = f(n) / bracket(n), walked down from f(0) = 1
    fn q_factorial_by_descent(n: i64, q: &BigRational) -> BigRational {
        assert!(n <= 0);
        let mut f = int(1);
        let mut m = 0;
        while m > n {
            let b = (pow(q, roman_bracket_int(m)).unwrap() - int(1)) / (q - int(1));
            f /= b;
            m -= 1;
        }
        f
    }

    #[test]
    fn q_brackets() {
        let two = int(2);
        assert_eq!(q_bracket(3, &two).unwrap(), int(7));
        assert_eq!(q_bracket(0, &two).unwrap(), int(1));
        assert_eq!(q_bracket(-1, &two).unwrap(), ratio(-1, 2));
        assert!(q_bracket(3, &int(1)).is_err());
        assert!(q_bracket(3, &int(0)).is_err());
        // q = -1 annihilates even brackets
        assert_eq!(q_bracket(2, &int(-1)).unwrap(), int(0));
    }

    #[test]
    fn q_factorials() {
        let two = int(2);
        assert_eq!(q_factorial(3, &two).unwrap(), int(21));
        assert_eq!(q_factorial(0, &int(5)).unwrap(), int(1));
        assert_eq!(q_factorial(-2, &two).unwrap(), int(-2));
        for n in -8..=0 {
            for q in [int(2), ratio(3, 2), ratio(-1, 3)] {
                assert_eq!(q_factorial(n, &q).unwrap(), q_factorial_by_descent(n, &q));
            }
        }
        // root of unity in the denominator
        assert!(matches!(q_factorial(-3, &int(-1)), Err(Error::Domain(_))));
    }

    #[test]
    fn q_factorial_ratio_law() {
        let q = ratio(3, 2);
        for n in -10..=10 {
            let r = q_factorial(n, &q).unwrap() / q_factorial(n - 1, &q).unwrap();
            assert_eq!(r, q_bracket(n, &q).unwrap());
        }
    }

    #[test]
    fn q_degenerates_to_roman_bracket() {
        for n in 0..=8i64 {
            let target = roman_bracket_int(n) as f64;
            let mut last_err = f64::INFINITY;
            for m in 1..=6u32 {
                let step = ratio(1, 10i64.pow(m));
                let q = int(1) + &step;
                let v = q_bracket(n, &q).unwrap().to_f64().unwrap();
                let err = (v - target).abs();
                // [n]_q - n = sum_{i<n} (q^i - 1) <= C(n,2) (q-1) q^n
                let pairs = (n * (n - 1) / 2) as f64;
                let bound = pairs * step.to_f64().unwrap() * q.to_f64().unwrap().powi(n as i32);
                assert!(err <= bound + 1e-12, "n={n} m={m} err={err} bound={bound}");
                assert!(err <= last_err, "n={n} m={m}");
                last_err = err;
            }
        }
    }

    #[test]
    fn ratio_law_and_bridges() {
        for n in -50..=50 {
            let r = roman_factorial(n) / roman_factorial(n - 1);
            assert_eq!(r, int(roman_bracket_int(n)), "n = {n}");
            assert_eq!(
                knuth_factorial(n).substitute(&int(1)).unwrap(),
                roman_factorial(n)
            );
            assert!(!roman_factorial(n).is_zero());
        }
    }

    #[test]
    fn factorial_product() {
        assert_eq!(roman_factorial(0) * roman_factorial(0), int(1));
        for n in 1..=50 {
            let p = roman_factorial(n) * roman_factorial(-n);
            assert_eq!(p, neg_one_pow(n + 1) * int(n), "n = {n}");
        }
    }

    #[test]
    fn schemes() {
        assert_eq!(
            scheme_factorial(&FactorialScheme::Roman, -2).unwrap(),
            EpsLaurent::constant(int(-1))
        );
        assert_eq!(
            scheme_factorial(&FactorialScheme::Trivial, -2).unwrap(),
            EpsLaurent::one()
        );
        assert_eq!(
            scheme_factorial(&FactorialScheme::Knuth, -2).unwrap(),
            EpsLaurent::monomial(int(-1), -1)
        );
        assert!(FactorialScheme::q(int(1)).is_err());
        assert_eq!(
            "q:3/2".parse::<FactorialScheme>().unwrap().to_string(),
            "q:3/2"
        );
        assert!(matches!(
            "q:1".parse::<FactorialScheme>(),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            "nope".parse::<FactorialScheme>(),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn real_path() {
        let rel = |a: f64, b: f64| ((a - b) / b).abs();
        assert!(rel(roman_factorial_real(0.5).unwrap(), 0.886226925452758) < 1e-12);
        assert_eq!(roman_factorial_real(-2.0).unwrap(), -1.0);
        assert!(rel(roman_factorial_real(4.0).unwrap(), 24.0) < 1e-13);
        for n in -20..=20i64 {
            let exact = roman_factorial(n).to_f64().unwrap();
            assert!(rel(roman_factorial_real(n as f64).unwrap(), exact) < 1e-10);
        }
        assert!(matches!(roman_factorial_real(171.0), Err(Error::Range(_))));
        assert!(roman_factorial_real(f64::NAN).is_err());
        // Gamma changes sign between consecutive negative integers
        assert!(roman_factorial_real(-1.5).unwrap() < 0.0);
        assert!(roman_factorial_real(-2.5).unwrap() > 0.0);
    }
}
