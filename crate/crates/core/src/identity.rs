//! Checkable forms of the Roman-coefficient identities and a grid sweeper.
//!
//! Each checker returns an [`IdentityVerdict`] carrying both rendered sides,
//! so a failing tuple can be inspected without recomputation. Where the
//! published statement of an identity carries a sign that the definitions do
//! not support, the verdict asserts the derived sign and records the published
//! one in [`IdentityVerdict::alternate`].

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::coeff::{classify_region, gamma_coeff, roman_coeff, scheme_coeff};
use crate::error::{Error, Result};
use crate::exact::{int, neg_one_pow, EpsLaurent};
use crate::factorial::{roman_factorial, FactorialScheme};

/// The coefficient a checker is instantiated with: one of the factorial
/// schemes, or the Gamma coefficients (the `e -> 0` limit of Knuth).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoeffFamily {
    Scheme(FactorialScheme),
    Gamma,
}

impl CoeffFamily {
    pub const ROMAN: CoeffFamily = CoeffFamily::Scheme(FactorialScheme::Roman);

    pub fn coeff(&self, n: i64, k: i64) -> Result<EpsLaurent> {
        match self {
            CoeffFamily::Scheme(s) => scheme_coeff(s, n, k),
            CoeffFamily::Gamma => Ok(EpsLaurent::constant(BigRational::from_integer(
                gamma_coeff(n, k),
            ))),
        }
    }
}

impl fmt::Display for CoeffFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffFamily::Scheme(s) => write!(f, "{s}"),
            CoeffFamily::Gamma => f.write_str("gamma"),
        }
    }
}

impl FromStr for CoeffFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "gamma" {
            Ok(CoeffFamily::Gamma)
        } else {
            s.parse().map(CoeffFamily::Scheme)
        }
    }
}

/// Anything that can produce coefficients of a fixed family.
pub trait CoeffSource {
    fn coeff(&self, n: i64, k: i64) -> Result<EpsLaurent>;
}

impl CoeffSource for CoeffFamily {
    fn coeff(&self, n: i64, k: i64) -> Result<EpsLaurent> {
        CoeffFamily::coeff(self, n, k)
    }
}

/// Factorials of one family precomputed over a contiguous range, so a sweep
/// evaluates each factorial once. Arguments outside the range are computed
/// on demand.
pub struct FactorialTable {
    family: CoeffFamily,
    scheme: FactorialScheme,
    lo: i64,
    values: Vec<EpsLaurent>,
}

impl FactorialTable {
    pub fn new(family: &CoeffFamily, lo: i64, hi: i64) -> Result<Self> {
        let scheme = match family {
            CoeffFamily::Scheme(s) => s.clone(),
            CoeffFamily::Gamma => FactorialScheme::Knuth,
        };
        let values = (lo..=hi)
            .map(|m| scheme.factorial(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            family: family.clone(),
            scheme,
            lo,
            values,
        })
    }

    /// A table wide enough for every factorial argument a sweep over
    /// `lo..=hi` touches (`n`, `k`, differences of two coordinates, and
    /// their predecessors).
    pub fn for_bounds(family: &CoeffFamily, bounds: GridBounds) -> Result<Self> {
        let span = bounds.hi - bounds.lo;
        Self::new(family, bounds.lo.min(-span) - 2, bounds.hi.max(span) + 2)
    }

    fn factorial(&self, m: i64) -> Result<EpsLaurent> {
        let hit = usize::try_from(m - self.lo)
            .ok()
            .and_then(|i| self.values.get(i));
        match hit {
            Some(v) => Ok(v.clone()),
            None => self.scheme.factorial(m),
        }
    }
}

impl CoeffSource for FactorialTable {
    fn coeff(&self, n: i64, k: i64) -> Result<EpsLaurent> {
        let denom = &self.factorial(k)? * &self.factorial(n - k)?;
        let quotient = self.factorial(n)?.checked_div(&denom)?;
        match self.family {
            CoeffFamily::Gamma => Ok(EpsLaurent::constant(quotient.limit_at_zero()?)),
            CoeffFamily::Scheme(_) => Ok(quotient),
        }
    }
}

/// Memoizes coefficients of an inner source; sweeps revisit the same pairs
/// many times.
struct CoeffMemo<'a, S> {
    inner: &'a S,
    seen: RefCell<HashMap<(i64, i64), EpsLaurent>>,
}

impl<'a, S: CoeffSource> CoeffMemo<'a, S> {
    fn new(inner: &'a S) -> Self {
        Self {
            inner,
            seen: RefCell::new(HashMap::new()),
        }
    }
}

impl<S: CoeffSource> CoeffSource for CoeffMemo<'_, S> {
    fn coeff(&self, n: i64, k: i64) -> Result<EpsLaurent> {
        if let Some(v) = self.seen.borrow().get(&(n, k)) {
            return Ok(v.clone());
        }
        let v = self.inner.coeff(n, k)?;
        self.seen.borrow_mut().insert((n, k), v.clone());
        Ok(v)
    }
}

/// A secondary reading of the same identity, checked alongside the primary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlternateForm {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityVerdict {
    pub identity: String,
    pub args: Vec<i64>,
    pub applicable: bool,
    /// Only meaningful when `applicable` is set.
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alternate: Option<AlternateForm>,
}

impl IdentityVerdict {
    fn new(identity: Identity, args: Vec<i64>, lhs: &EpsLaurent, rhs: &EpsLaurent) -> Self {
        Self {
            identity: identity.name().to_string(),
            args,
            applicable: true,
            holds: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            alternate: None,
        }
    }

    fn applicable_if(mut self, applicable: bool) -> Self {
        self.applicable = applicable;
        self
    }

    fn with_alternate(mut self, label: &str, lhs: &EpsLaurent, rhs: &EpsLaurent) -> Self {
        self.alternate = Some(AlternateForm {
            label: label.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            holds: lhs == rhs,
        });
        self
    }

    /// Counted as a failure by the sweeper.
    pub fn failed(&self) -> bool {
        self.applicable && !self.holds
    }
}

/// Unrendered sides of a check. Sweeps keep these and only render failures.
struct Sides {
    identity: Identity,
    args: Vec<i64>,
    applicable: bool,
    lhs: EpsLaurent,
    rhs: EpsLaurent,
}

impl Sides {
    fn new(identity: Identity, args: Vec<i64>, lhs: EpsLaurent, rhs: EpsLaurent) -> Self {
        Self {
            identity,
            args,
            applicable: true,
            lhs,
            rhs,
        }
    }

    fn verdict(self) -> IdentityVerdict {
        IdentityVerdict::new(self.identity, self.args, &self.lhs, &self.rhs)
            .applicable_if(self.applicable)
    }

    fn failure(self) -> Option<GridFailure> {
        (self.applicable && self.lhs != self.rhs).then(|| GridFailure {
            args: self.args,
            lhs: self.lhs.to_string(),
            rhs: self.rhs.to_string(),
        })
    }
}

fn konst(v: BigRational) -> EpsLaurent {
    EpsLaurent::constant(v)
}

/// `(a choose b) = (a choose a-b)`.
pub fn check_complementation(n: i64, k: i64, family: &CoeffFamily) -> Result<IdentityVerdict> {
    complementation_with(family, n, k).map(Sides::verdict)
}

fn complementation_with(family: &impl CoeffSource, n: i64, k: i64) -> Result<Sides> {
    let lhs = family.coeff(n, k)?;
    let rhs = family.coeff(n, n - k)?;
    Ok(Sides::new(Identity::Complementation, vec![n, k], lhs, rhs))
}

/// `(a choose b)(b choose c) = (a choose c)(a-c choose b-c)`.
pub fn check_iterative(a: i64, b: i64, c: i64, family: &CoeffFamily) -> Result<IdentityVerdict> {
    iterative_with(family, a, b, c).map(Sides::verdict)
}

fn iterative_with(family: &impl CoeffSource, a: i64, b: i64, c: i64) -> Result<Sides> {
    let lhs = &family.coeff(a, b)? * &family.coeff(b, c)?;
    let rhs = &family.coeff(a, c)? * &family.coeff(a - c, b - c)?;
    Ok(Sides::new(Identity::Iterative, vec![a, b, c], lhs, rhs))
}

/// `(a choose k) = (a-1 choose k) + (a-1 choose k-1)`, asserted when `a`, `k`
/// and `a - k` are all nonzero (so each Roman bracket is the plain value).
pub fn check_pascal(a: i64, k: i64, family: &CoeffFamily) -> Result<IdentityVerdict> {
    pascal_with(family, a, k).map(Sides::verdict)
}

fn pascal_with(family: &impl CoeffSource, a: i64, k: i64) -> Result<Sides> {
    let lhs = family.coeff(a, k)?;
    let rhs = &family.coeff(a - 1, k)? + &family.coeff(a - 1, k - 1)?;
    let mut sides = Sides::new(Identity::Pascal, vec![a, k], lhs, rhs);
    sides.applicable = a != 0 && k != 0 && a != k;
    Ok(sides)
}

/// Pascal's rule for Gamma coefficients, which holds everywhere except the
/// origin (there the left side is 1 and the right side 2).
pub fn check_pascal_gamma(n: i64, k: i64) -> IdentityVerdict {
    let g = |n, k| konst(BigRational::from_integer(gamma_coeff(n, k)));
    let lhs = g(n, k);
    let rhs = &g(n - 1, k) + &g(n - 1, k - 1);
    IdentityVerdict::new(Identity::PascalGamma, vec![n, k], &lhs, &rhs)
        .applicable_if(!(n == 0 && k == 0))
}

/// Whether `(n,k)`, `(n+r,k)`, `(n,k+1)` and `(n+r+1,k+1)` share a region.
pub fn corollary_applies(n: i64, k: i64, r: i64) -> bool {
    let region = classify_region(n, k);
    r >= 0
        && [(n + r, k), (n, k + 1), (n + r + 1, k + 1)]
            .iter()
            .all(|&(a, b)| classify_region(a, b) == region)
}

/// `sum_{m=n..n+r} (m choose k) = (n+r+1 choose k+1) - (n choose k+1)` for
/// Roman coefficients, under the same-region hypothesis.
pub fn check_corollary_sum(n: i64, k: i64, r: i64) -> Result<IdentityVerdict> {
    if r < 0 {
        return Err(Error::Domain(format!("corollary needs r >= 0, got {r}")));
    }
    let sum = (n..=n + r).fold(BigRational::zero(), |acc, m| acc + roman_coeff(m, k));
    let rhs = roman_coeff(n + r + 1, k + 1) - roman_coeff(n, k + 1);
    Ok(IdentityVerdict::new(
        Identity::CorollarySum,
        vec![n, k, r],
        &konst(sum),
        &konst(rhs),
    )
    .applicable_if(corollary_applies(n, k, r)))
}

fn iverson(b: bool) -> i64 {
    i64::from(b)
}

/// `(-1)^(k+[k>0]) (-n choose k-1) = (-1)^(n+[n>0]) (-k choose n-1)`, together
/// with the reflection `(n choose k) = (-1)^(n+k+[n<0]+[k<0]) (-k-1 choose -n-1)`
/// it is derived from. Both must hold.
pub fn check_rotation_reflection(n: i64, k: i64) -> IdentityVerdict {
    let lhs = neg_one_pow(k + iverson(k > 0)) * roman_coeff(-n, k - 1);
    let rhs = neg_one_pow(n + iverson(n > 0)) * roman_coeff(-k, n - 1);
    let refl_lhs = roman_coeff(n, k);
    let refl_rhs =
        neg_one_pow(n + k + iverson(n < 0) + iverson(k < 0)) * roman_coeff(-k - 1, -n - 1);
    let mut v = IdentityVerdict::new(
        Identity::RotationReflection,
        vec![n, k],
        &konst(lhs),
        &konst(rhs),
    )
    .with_alternate("reflection", &konst(refl_lhs), &konst(refl_rhs));
    v.holds = v.holds && v.alternate.as_ref().is_some_and(|a| a.holds);
    v
}

/// `(n choose k)(k choose n) = (-1)^(n+k+1) / |n-k|` for `n != k`. The
/// alternate form carries the published sign `(-1)^(n+k)`.
pub fn check_romans_identity(n: i64, k: i64) -> Result<IdentityVerdict> {
    if n == k {
        return Err(Error::Domain(format!(
            "Roman's identity needs n != k, got n = k = {n}"
        )));
    }
    let product = konst(roman_coeff(n, k) * roman_coeff(k, n));
    let magnitude = int((n - k).abs()).recip();
    let derived = konst(neg_one_pow(n + k + 1) * &magnitude);
    let published = konst(neg_one_pow(n + k) * magnitude);
    Ok(
        IdentityVerdict::new(Identity::RomansIdentity, vec![n, k], &product, &derived)
            .with_alternate("published-sign", &product, &published),
    )
}

/// `[n]! [-n]! = (-1)^(|n|+1) |n|` for `n != 0`, and 1 at `n = 0`. The
/// alternate form carries the published right side `(-1)^n |n|`.
pub fn check_knuth_factorial_product(n: i64) -> IdentityVerdict {
    let product = konst(roman_factorial(n) * roman_factorial(-n));
    let m = n.abs();
    let derived = if n == 0 {
        int(1)
    } else {
        neg_one_pow(m + 1) * int(m)
    };
    let published = neg_one_pow(n) * int(m);
    IdentityVerdict::new(
        Identity::KnuthFactorialProduct,
        vec![n],
        &product,
        &konst(derived),
    )
    .with_alternate("published-sign", &product, &konst(published))
}

/// The identities the sweeper knows by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    Complementation,
    Iterative,
    Pascal,
    PascalGamma,
    CorollarySum,
    RotationReflection,
    RomansIdentity,
    KnuthFactorialProduct,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::Complementation,
        Identity::Iterative,
        Identity::Pascal,
        Identity::PascalGamma,
        Identity::CorollarySum,
        Identity::RotationReflection,
        Identity::RomansIdentity,
        Identity::KnuthFactorialProduct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Complementation => "complementation",
            Identity::Iterative => "iterative",
            Identity::Pascal => "pascal",
            Identity::PascalGamma => "pascal-gamma",
            Identity::CorollarySum => "corollary-sum",
            Identity::RotationReflection => "rotation-reflection",
            Identity::RomansIdentity => "romans-identity",
            Identity::KnuthFactorialProduct => "knuth-factorial-product",
        }
    }

    /// The family an identity is stated for when it is not parametric.
    pub fn fixed_family(self) -> Option<CoeffFamily> {
        match self {
            Identity::Complementation | Identity::Iterative | Identity::Pascal => None,
            Identity::PascalGamma => Some(CoeffFamily::Gamma),
            _ => Some(CoeffFamily::ROMAN),
        }
    }

    pub fn supports(self, family: &CoeffFamily) -> bool {
        match self {
            Identity::Complementation | Identity::Iterative => true,
            Identity::Pascal => matches!(
                family,
                CoeffFamily::Scheme(FactorialScheme::Roman | FactorialScheme::Knuth)
            ),
            _ => self.fixed_family().as_ref() == Some(family),
        }
    }

    /// Default family when the caller names none.
    pub fn default_family(self) -> CoeffFamily {
        self.fixed_family().unwrap_or(CoeffFamily::ROMAN)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Sweep domain: every coordinate runs over `lo..=hi`, except the
/// corollary's `r`, which runs over `0..=r_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridBounds {
    pub lo: i64,
    pub hi: i64,
    pub r_max: i64,
}

impl GridBounds {
    pub const DEFAULT_R_MAX: i64 = 6;

    pub fn new(lo: i64, hi: i64) -> Self {
        Self {
            lo,
            hi,
            r_max: Self::DEFAULT_R_MAX,
        }
    }

    pub fn with_r_max(mut self, r_max: i64) -> Self {
        self.r_max = r_max;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridFailure {
    pub args: Vec<i64>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridReport {
    pub identity: String,
    pub bounds: [i64; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_range: Option<[i64; 2]>,
    pub scheme: String,
    pub applicable: u64,
    pub held: u64,
    pub failed: u64,
    pub failures: Vec<GridFailure>,
}

impl GridReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Default)]
struct Tally {
    applicable: u64,
    failures: Vec<GridFailure>,
}

impl Tally {
    fn sides(&mut self, sides: Sides) {
        self.applicable += u64::from(sides.applicable);
        self.failures.extend(sides.failure());
    }

    fn verdict(&mut self, v: IdentityVerdict) {
        self.applicable += u64::from(v.applicable);
        if v.failed() {
            self.failures.push(GridFailure {
                args: v.args,
                lhs: v.lhs,
                rhs: v.rhs,
            });
        }
    }
}

/// Runs `identity` over every tuple in `bounds`. Failing tuples are listed in
/// lexicographic order.
pub fn verify_grid(
    identity: Identity,
    bounds: GridBounds,
    family: &CoeffFamily,
) -> Result<GridReport> {
    if !identity.supports(family) {
        return Err(Error::UnsupportedScheme {
            identity: identity.name().to_string(),
            scheme: family.to_string(),
        });
    }
    let range = || bounds.lo..=bounds.hi;
    let factorials = FactorialTable::for_bounds(family, bounds)?;
    let table = CoeffMemo::new(&factorials);
    let mut tally = Tally::default();
    match identity {
        Identity::Complementation | Identity::Pascal => {
            for n in range() {
                for k in range() {
                    tally.sides(match identity {
                        Identity::Complementation => complementation_with(&table, n, k)?,
                        _ => pascal_with(&table, n, k)?,
                    });
                }
            }
        }
        Identity::PascalGamma => {
            for n in range() {
                for k in range() {
                    tally.verdict(check_pascal_gamma(n, k));
                }
            }
        }
        Identity::RotationReflection => {
            for n in range() {
                for k in range() {
                    tally.verdict(check_rotation_reflection(n, k));
                }
            }
        }
        Identity::RomansIdentity => {
            for n in range() {
                for k in range().filter(|&k| k != n) {
                    tally.verdict(check_romans_identity(n, k)?);
                }
            }
        }
        Identity::Iterative => {
            for a in range() {
                for b in range() {
                    for c in range() {
                        tally.sides(iterative_with(&table, a, b, c)?);
                    }
                }
            }
        }
        Identity::CorollarySum => {
            for n in range() {
                for k in range() {
                    for r in 0..=bounds.r_max {
                        tally.verdict(check_corollary_sum(n, k, r)?);
                    }
                }
            }
        }
        Identity::KnuthFactorialProduct => {
            for n in range() {
                tally.verdict(check_knuth_factorial_product(n));
            }
        }
    }

    let Tally {
        applicable,
        mut failures,
    } = tally;
    failures.sort_by(|a, b| a.args.cmp(&b.args));
    let failed = failures.len() as u64;
    Ok(GridReport {
        identity: identity.name().to_string(),
        bounds: [bounds.lo, bounds.hi],
        r_range: (identity == Identity::CorollarySum).then_some([0, bounds.r_max]),
        scheme: family.to_string(),
        applicable,
        held: applicable - failed,
        failed,
        failures,
    })
}
