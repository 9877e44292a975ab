//! Exact generalized factorials and the binomial coefficients they induce.
//!
//! The Roman factorial extends `n!` to negative integers as
//! `(-1)^(n+1) / (-n-1)!`, which makes `[n]! / ([k]! [n-k]!)` finite and
//! nonzero on the whole integer plane. Alongside it the crate carries the
//! Knuth factorial (valued in Laurent polynomials of a formal infinitesimal
//! `e`), its `e -> 0` limit (Gamma coefficients), the trivial factorial and a
//! q-analog, together with checkers for the identities these satisfy and the
//! exact resistance of the n-cube.

pub mod coeff;
pub mod cube;
pub mod error;
pub mod exact;
pub mod factorial;
pub mod gamma;
pub mod identity;

pub use coeff::{
    beta_limit, binomial, binomial_extended, classify_region, forward_diff_inverse, gamma_coeff,
    knuth_coeff, lower_factorial, multinomial_gamma, multinomial_knuth, multinomial_roman,
    multinomial_scheme, region_all_forms, region_closed_form, roman_coeff, scheme_coeff, stirling2,
    stirling_series_partial, MultiIndex, Region,
};
pub use error::{Error, Result};
pub use exact::{BigInt, BigRational, EpsLaurent};
pub use factorial::{
    knuth_factorial, q_bracket, q_factorial, roman_bracket, roman_factorial, roman_factorial_real,
    scheme_factorial, trivial_factorial, FactorialScheme,
};
