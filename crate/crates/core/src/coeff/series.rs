//! The infinite-sum, finite-difference and Beta expressions that appear among
//! the region formulas.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{binomial, classify_region, Region};
use crate::error::{Error, Result};
use crate::exact::{int, neg_one_pow, render_rational};
use crate::factorial::{factorial, knuth_factorial};

/// Stirling numbers of the second kind `S(j, n)` via
/// `S(j, n) = n S(j-1, n) + S(j-1, n-1)`.
pub fn stirling2(j: i64, n: i64) -> Result<BigInt> {
    if j < 0 || n < 0 {
        return Err(Error::Domain(format!(
            "Stirling numbers need nonnegative arguments, got S({j}, {n})"
        )));
    }
    if n > j {
        return Ok(BigInt::zero());
    }
    let n = n as usize;
    let mut row = vec![BigInt::zero(); n + 1];
    row[0] = BigInt::one();
    for _ in 0..j {
        row = next_stirling_row(&row);
    }
    Ok(row[n].clone())
}

// row j -> row j+1, truncated to the same width
fn next_stirling_row(row: &[BigInt]) -> Vec<BigInt> {
    let mut next = vec![BigInt::zero(); row.len()];
    for m in 1..row.len() {
        next[m] = &row[m] * m + &row[m - 1];
    }
    next
}

/// Partial sum over `j < terms` of the region-4 Stirling expansion
/// `(-1)^(n+k+1) n! sum_j S(j, n) / k^(j+1)`, which converges to the Roman
/// coefficient of `(n, k)`.
pub fn stirling_series_partial(n: i64, k: i64, terms: u32) -> Result<BigRational> {
    if classify_region(n, k) != Region::R4 || n < 1 {
        return Err(Error::Domain(format!(
            "Stirling series needs k > n >= 1, got ({n}, {k})"
        )));
    }
    if terms == 0 {
        return Err(Error::Domain(
            "Stirling series needs at least one term".into(),
        ));
    }
    let width = n as usize + 1;
    let mut row = vec![BigInt::zero(); width];
    row[0] = BigInt::one();
    let k_big = BigInt::from(k);
    let mut k_power = k_big.clone();
    let mut sum = BigRational::zero();
    for _ in 0..terms {
        if !row[width - 1].is_zero() {
            sum += BigRational::new(row[width - 1].clone(), k_power.clone());
        }
        row = next_stirling_row(&row);
        k_power *= &k_big;
    }
    let scale = BigRational::from_integer(factorial(n as u64));
    Ok(neg_one_pow(n + k + 1) * scale * sum)
}

/// `[Delta^order 1/(x - c)]` at `x = 0`, i.e.
/// `sum_j (-1)^(order-j) C(order, j) / (j - c)`.
pub fn forward_diff_inverse(order: i64, c: &BigRational) -> Result<BigRational> {
    if order < 0 {
        return Err(Error::Domain(format!(
            "difference order {order} is negative"
        )));
    }
    let mut acc = BigRational::zero();
    for j in 0..=order {
        let gap = int(j) - c;
        if gap.is_zero() {
            return Err(Error::Pole(format!(
                "1/(x - {}) evaluated at x = {j}",
                render_rational(c)
            )));
        }
        acc += neg_one_pow(order - j) * BigRational::from_integer(binomial(order, j)) / gap;
    }
    Ok(acc)
}

/// Regularized `B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b)`: the `e -> 0`
/// limit of the quotient of Knuth factorials.
pub fn beta_limit(a: i64, b: i64) -> Result<BigRational> {
    let numer = &knuth_factorial(a - 1) * &knuth_factorial(b - 1);
    numer
        .checked_div(&knuth_factorial(a + b - 1))?
        .limit_at_zero()
}
