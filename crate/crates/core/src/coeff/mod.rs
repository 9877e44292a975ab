//! Binomial-coefficient generalizations over the integer plane.

mod multinomial;
mod region;
mod series;

pub use multinomial::{
    multinomial_gamma, multinomial_knuth, multinomial_roman, multinomial_scheme, MultiIndex,
};
pub use region::{classify_region, region_all_forms, region_closed_form, Region};
pub use series::{beta_limit, forward_diff_inverse, stirling2, stirling_series_partial};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{render_rational, EpsLaurent};
use crate::factorial::{factorial, knuth_factorial, roman_factorial, FactorialScheme};

/// Classical `C(n, k)` for `n >= 0`; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Lower factorial `(x)_k`: the falling product `x(x-1)...(x-k+1)` for
/// `k >= 0`, and `1/((x+1)(x+2)...(x-k))` for `k < 0`.
pub fn lower_factorial(x: &BigRational, k: i64) -> Result<BigRational> {
    let one = BigRational::one();
    if k >= 0 {
        let mut acc = one;
        let mut factor = x.clone();
        for _ in 0..k {
            acc *= &factor;
            factor -= BigRational::one();
        }
        return Ok(acc);
    }
    let mut denom = one;
    let mut factor = x.clone();
    for _ in 0..k.unsigned_abs() {
        factor += BigRational::one();
        if factor.is_zero() {
            return Err(Error::Pole(format!(
                "lower factorial ({})_{k} has a zero factor",
                render_rational(x)
            )));
        }
        denom *= &factor;
    }
    Ok(denom.recip())
}

/// Extended binomial `(x)_k / k!`, defined for `k >= 0` only.
pub fn binomial_extended(x: &BigRational, k: i64) -> Result<BigRational> {
    if k < 0 {
        return Err(Error::Domain(format!(
            "extended binomial needs k >= 0, got {k}"
        )));
    }
    Ok(lower_factorial(x, k)? / BigRational::from_integer(factorial(k as u64)))
}

/// Roman coefficient from its definition `[n]! / ([k]! [n-k]!)`.
pub fn roman_coeff(n: i64, k: i64) -> BigRational {
    roman_factorial(n) / (roman_factorial(k) * roman_factorial(n - k))
}

/// Knuth coefficient: the same quotient built from `e`-carrying factorials.
/// Always a monomial of degree 0 (regions 1-3) or 1 (regions 4-6).
pub fn knuth_coeff(n: i64, k: i64) -> EpsLaurent {
    let denom = &knuth_factorial(k) * &knuth_factorial(n - k);
    knuth_factorial(n)
        .checked_div(&denom)
        .expect("products of Knuth factorials are nonzero monomials")
}

/// The `e -> 0` limit of the Knuth coefficient. Integer valued, and zero
/// exactly in regions 4-6.
pub fn gamma_coeff(n: i64, k: i64) -> BigInt {
    let limit = knuth_coeff(n, k)
        .limit_at_zero()
        .expect("Knuth coefficients of integer pairs have no pole");
    debug_assert!(limit.is_integer());
    limit.to_integer()
}

/// Coefficient `f(n) / (f(k) f(n-k))` for the scheme's factorial `f`.
pub fn scheme_coeff(scheme: &FactorialScheme, n: i64, k: i64) -> Result<EpsLaurent> {
    let denom = &scheme.factorial(k)? * &scheme.factorial(n - k)?;
    scheme.factorial(n)?.checked_div(&denom)
}
