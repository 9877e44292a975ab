//! Exact arithmetic: canonical rationals and Laurent polynomials in a formal
//! infinitesimal `e`.

mod laurent;
mod rational;

pub use laurent::{eps_arith, EpsLaurent};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use rational::{
    int, neg_one_pow, parse_rational, pow, rat_arith, ratio, render_rational, ArithOp,
};
