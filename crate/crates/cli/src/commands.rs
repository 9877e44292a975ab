//! Command bodies, separated from argument parsing so they can be tested
//! without spawning the binary.

use romankit::identity::{verify_grid, CoeffFamily, GridBounds, GridReport, Identity};
use romankit::{
    multinomial_gamma, multinomial_scheme, roman_factorial_real, EpsLaurent, Error, MultiIndex,
    Result,
};
use serde_json::json;

use crate::ledger::{ledger_entries, render_ledger};
use crate::output::{json_text, render_table, OutputFormat};
use crate::tables::{build_table, TableName};

/// Rendered output plus the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

pub const EXIT_IDENTITY_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;

pub fn exit_code(err: &Error) -> u8 {
    if err.is_usage() {
        EXIT_USAGE
    } else {
        EXIT_DOMAIN
    }
}

/// The lower argument: a single `k` or a comma-separated multi-index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lower {
    K(i64),
    Multi(MultiIndex),
}

impl std::str::FromStr for Lower {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.contains(',') {
            s.parse().map(Lower::Multi)
        } else {
            s.trim()
                .parse()
                .map(Lower::K)
                .map_err(|_| Error::Parse(format!("`{s}` is not an integer")))
        }
    }
}

pub fn eval(scheme: &str, n: i64, lower: &str, format: OutputFormat) -> Result<Outcome> {
    let family: CoeffFamily = scheme.parse()?;
    let lower: Lower = lower.parse()?;
    let value = match (&family, &lower) {
        (_, Lower::K(k)) => family.coeff(n, *k)?,
        (CoeffFamily::Gamma, Lower::Multi(beta)) => {
            EpsLaurent::constant(multinomial_gamma(n, beta)?.into())
        }
        (CoeffFamily::Scheme(s), Lower::Multi(beta)) => multinomial_scheme(s, n, beta)?,
    };
    let k_text = match &lower {
        Lower::K(k) => k.to_string(),
        Lower::Multi(beta) => beta.to_string(),
    };
    let text = match format {
        OutputFormat::Plain => format!("{value}\n"),
        OutputFormat::Csv => format!("scheme,n,k,value\n{family},{n},\"{k_text}\",{value}\n"),
        OutputFormat::Json => {
            let k = match &lower {
                Lower::K(k) => json!(k),
                Lower::Multi(beta) => json!(beta.entries()),
            };
            json_text(&json!({
                "scheme": family.to_string(),
                "n": n,
                "k": k,
                "value": value.to_string(),
            }))
        }
    };
    Ok(Outcome::ok(text))
}

pub fn table(name: &str, format: OutputFormat) -> Result<Outcome> {
    let name: TableName = name.parse()?;
    Ok(Outcome::ok(render_table(&build_table(name), format)))
}

/// Parses `lo..hi` (inclusive).
pub fn parse_bounds(s: &str) -> Result<(i64, i64)> {
    let bad = || Error::Parse(format!("bounds `{s}` are not of the form lo..hi"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(Error::Parse(format!("empty bounds `{s}`")));
    }
    Ok((lo, hi))
}

pub const DEFAULT_BOUNDS: &str = "-10..10";

/// Resolves `identity` (a name or `all`) and an optional scheme into the
/// sweeps to run.
pub fn plan(identity: &str, scheme: Option<&str>) -> Result<Vec<(Identity, CoeffFamily)>> {
    let requested: Option<CoeffFamily> = scheme.map(str::parse).transpose()?;
    if identity == "all" {
        let family = requested.unwrap_or(CoeffFamily::ROMAN);
        return Ok(Identity::ALL
            .into_iter()
            .filter_map(|id| match id.fixed_family() {
                Some(fixed) => Some((id, fixed)),
                None => id.supports(&family).then(|| (id, family.clone())),
            })
            .collect());
    }
    let id: Identity = identity.parse()?;
    let family = requested.unwrap_or_else(|| id.default_family());
    if !id.supports(&family) {
        return Err(Error::UnsupportedScheme {
            identity: id.name().to_string(),
            scheme: family.to_string(),
        });
    }
    Ok(vec![(id, family)])
}

pub fn verify(
    identity: &str,
    bounds: &str,
    scheme: Option<&str>,
    r_max: Option<i64>,
    format: OutputFormat,
) -> Result<Outcome> {
    let (lo, hi) = parse_bounds(bounds)?;
    let mut grid = GridBounds::new(lo, hi);
    if let Some(r) = r_max {
        if r < 0 {
            return Err(Error::Parse(format!("--r-max {r} is negative")));
        }
        grid = grid.with_r_max(r);
    }
    let reports = plan(identity, scheme)?
        .into_iter()
        .map(|(id, family)| verify_grid(id, grid, &family))
        .collect::<Result<Vec<GridReport>>>()?;
    let code = if reports.iter().all(GridReport::passed) {
        0
    } else {
        EXIT_IDENTITY_FAILURE
    };
    let text = match format {
        OutputFormat::Json if identity != "all" => json_text(&reports[0]),
        OutputFormat::Json => json_text(&reports),
        OutputFormat::Csv => {
            let mut out = String::from("identity,scheme,lo,hi,applicable,held,failed\n");
            for r in &reports {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r.identity, r.scheme, r.bounds[0], r.bounds[1], r.applicable, r.held, r.failed
                ));
            }
            out
        }
        OutputFormat::Plain => reports.iter().map(report_plain).collect(),
    };
    Ok(Outcome { text, code })
}

fn report_plain(r: &GridReport) -> String {
    let mut domain = format!("[{},{}]", r.bounds[0], r.bounds[1]);
    if let Some([a, b]) = r.r_range {
        domain.push_str(&format!(" r=[{a},{b}]"));
    }
    let status = if r.passed() { "ok" } else { "FAILED" };
    let mut out = format!(
        "{:<24} {:<8} {domain:<18} applicable {:>6}  held {:>6}  failed {:>4}  {status}\n",
        r.identity, r.scheme, r.applicable, r.held, r.failed
    );
    for f in &r.failures {
        let args: Vec<String> = f.args.iter().map(i64::to_string).collect();
        out.push_str(&format!(
            "    ({}): lhs {}, rhs {}\n",
            args.join(","),
            f.lhs,
            f.rhs
        ));
    }
    out
}

pub fn ledger(format: OutputFormat) -> Result<Outcome> {
    Ok(Outcome::ok(render_ledger(&ledger_entries()?, format)))
}

/// Floating-point Roman factorial of `a`, or the coefficient `(a choose b)`
/// as a quotient of three of them.
pub fn real(a: f64, b: Option<f64>, format: OutputFormat) -> Result<Outcome> {
    let value = match b {
        None => roman_factorial_real(a)?,
        Some(b) => {
            roman_factorial_real(a)? / (roman_factorial_real(b)? * roman_factorial_real(a - b)?)
        }
    };
    let shown = render_float(value);
    let text = match format {
        OutputFormat::Plain => format!("{shown}\n"),
        OutputFormat::Csv => match b {
            None => format!("a,value\n{a},{shown}\n"),
            Some(b) => format!("a,b,value\n{a},{b},{shown}\n"),
        },
        OutputFormat::Json => json_text(&json!({ "a": a, "b": b, "value": value })),
    };
    Ok(Outcome::ok(text))
}

/// Shortest round-tripping decimal, switching to scientific notation for
/// very large or small magnitudes.
fn render_float(x: f64) -> String {
    let mag = x.abs();
    if mag != 0.0 && !(1e-4..1e16).contains(&mag) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}
