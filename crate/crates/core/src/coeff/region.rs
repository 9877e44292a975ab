use std::fmt;

use num_rational::BigRational;

use super::binomial;
use super::series::{beta_limit, forward_diff_inverse};
use crate::exact::{int, neg_one_pow};

/// The six pieces of the integer plane on which Roman coefficients have
/// distinct closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    /// `n >= k >= 0`
    R1,
    /// `k >= 0 > n`
    R2,
    /// `0 > n >= k`
    R3,
    /// `k > n >= 0`
    R4,
    /// `n >= 0 > k`
    R5,
    /// `0 > k > n`
    R6,
}

impl Region {
    pub const ALL: [Region; 6] = [
        Region::R1,
        Region::R2,
        Region::R3,
        Region::R4,
        Region::R5,
        Region::R6,
    ];

    /// The defining inequality, evaluated directly.
    pub fn contains(self, n: i64, k: i64) -> bool {
        match self {
            Region::R1 => n >= k && k >= 0,
            Region::R2 => k >= 0 && 0 > n,
            Region::R3 => 0 > n && n >= k,
            Region::R4 => k > n && n >= 0,
            Region::R5 => n >= 0 && 0 > k,
            Region::R6 => 0 > k && k > n,
        }
    }

    pub fn index(self) -> u8 {
        self as u8 + 1
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", self.index())
    }
}

pub fn classify_region(n: i64, k: i64) -> Region {
    if n >= 0 {
        if k < 0 {
            Region::R5
        } else if k <= n {
            Region::R1
        } else {
            Region::R4
        }
    } else if k >= 0 {
        Region::R2
    } else if k <= n {
        Region::R3
    } else {
        Region::R6
    }
}

fn binom(n: i64, k: i64) -> BigRational {
    BigRational::from_integer(binomial(n, k))
}

/// `sign / (scale * C(top, bottom))`
fn reciprocal_form(sign: i64, scale: i64, top: i64, bottom: i64) -> BigRational {
    neg_one_pow(sign) / (int(scale) * binom(top, bottom))
}

/// The leading closed form for the pair's region, built from classical
/// binomials only.
pub fn region_closed_form(n: i64, k: i64) -> BigRational {
    match classify_region(n, k) {
        Region::R1 => binom(n, k),
        Region::R2 => neg_one_pow(k) * binom(-n + k - 1, k),
        Region::R3 => neg_one_pow(n + k) * binom(-k - 1, n - k),
        Region::R4 => reciprocal_form(n + k, n - k, k, n),
        Region::R5 => reciprocal_form(k, k, n - k, n),
        Region::R6 => reciprocal_form(0, n - k, -n - 1, -k - 1),
    }
}

/// Every finite closed form for the pair's region, in a fixed order. All
/// entries agree with each other and with the Roman coefficient.
///
/// R1-R3 have one form each. R4 has four: three reciprocal binomials and the
/// forward difference. R5 has six: three reciprocal binomials, the R4 value at
/// `(n, n-k)`, the forward difference and the regularized Beta function. R6
/// has six: three reciprocal binomials, the forward difference, and the
/// signed values at `(k-n-1, -n-1)` in R4 and `(k-n-1, k)` in R5.
pub fn region_all_forms(n: i64, k: i64) -> Vec<BigRational> {
    let region = classify_region(n, k);
    match region {
        Region::R1 | Region::R2 | Region::R3 => vec![region_closed_form(n, k)],
        Region::R4 => vec![
            reciprocal_form(n + k, n - k, k, n),
            reciprocal_form(n + k + 1, n + 1, k, n + 1),
            reciprocal_form(n + k + 1, k, k - 1, n),
            neg_one_pow(n + k) * forward_diff_at(n, k),
        ],
        Region::R5 => vec![
            reciprocal_form(k, k, n - k, n),
            reciprocal_form(k, k - n, n - k - 1, n),
            reciprocal_form(k + 1, n + 1, n - k, n + 1),
            region_closed_form(n, n - k),
            neg_one_pow(k) * forward_diff_at(n, n - k),
            -beta_limit(k - n, -k).expect("R5 Beta quotient has no pole"),
        ],
        Region::R6 => vec![
            reciprocal_form(0, n - k, -n - 1, -k - 1),
            reciprocal_form(0, k, -n - 1, -k),
            reciprocal_form(0, n + 1, -n - 2, -k - 1),
            forward_diff_at(k - n - 1, -(n + 1)),
            neg_one_pow(k) * region_closed_form(k - n - 1, -n - 1),
            neg_one_pow(k) * region_closed_form(k - n - 1, k),
        ],
    }
}

/// `[Delta^order 1/(x - c)]` at `x = 0` for an integer pole `c` known to lie
/// outside `0..=order`.
fn forward_diff_at(order: i64, c: i64) -> BigRational {
    forward_diff_inverse(order, &int(c)).expect("pole lies outside the stencil")
}
