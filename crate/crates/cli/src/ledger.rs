//! Places where a printed formula or table value disagrees with what the
//! definitions give. Every entry carries a witness computed at run time.

use romankit::coeff::{binomial, roman_coeff};
use romankit::cube::{level_resistance, resistance_direct};
use romankit::exact::{int, neg_one_pow, render_rational};
use romankit::factorial::{factorial, roman_factorial};
use romankit::identity::{check_knuth_factorial_product, check_romans_identity, IdentityVerdict};
use romankit::{BigRational, Result};
use serde::Serialize;

use crate::output::{json_text, OutputFormat};
use crate::tables::{build_table, TableName};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerEntry {
    pub id: String,
    pub location: String,
    pub published: String,
    pub derived: String,
    pub witness: String,
}

impl LedgerEntry {
    fn new(id: &str, location: &str, published: &str, derived: &str, witness: String) -> Self {
        Self {
            id: id.to_string(),
            location: location.to_string(),
            published: published.to_string(),
            derived: derived.to_string(),
            witness,
        }
    }

    /// `id: published X, derived Y`.
    pub fn headline(&self) -> String {
        format!(
            "{}: published {}, derived {}",
            self.id, self.published, self.derived
        )
    }
}

fn sign_witness(args: &str, verdict: &IdentityVerdict) -> String {
    let published = verdict
        .alternate
        .as_ref()
        .map(|alt| alt.rhs.as_str())
        .unwrap_or("?");
    format!(
        "{args}: product {}, published form {published}, derived form {}",
        verdict.lhs, verdict.rhs
    )
}

fn mismatch(at: &str, published: &BigRational, derived: &BigRational) -> String {
    format!(
        "{at}: published form {}, coefficient {}",
        render_rational(published),
        render_rational(derived)
    )
}

/// The computation behind a derived table cell.
fn note_witness(name: TableName, n: i64, k: Option<i64>) -> String {
    let rf = |m: i64| render_rational(&roman_factorial(m));
    match (name, k) {
        (TableName::Resistance, _) if n >= 1 => {
            let prev = resistance_direct(n as u32 - 1).ohms;
            let value = resistance_direct(n as u32).ohms;
            format!(
                "R_{n} = (R_{} + 2/{n})/2 = ({} + 2/{n})/2 = {}",
                n - 1,
                render_rational(&prev),
                render_rational(&value)
            )
        }
        (TableName::RomanFactorials, _) => format!("[{n}]! = {}", rf(n)),
        (_, Some(k)) => format!(
            "[{n}]!/([{k}]! [{}]!) = {}/(({})*({})) = {}",
            n - k,
            rf(n),
            rf(k),
            rf(n - k),
            render_rational(&roman_coeff(n, k))
        ),
        _ => String::new(),
    }
}

pub fn ledger_entries() -> Result<Vec<LedgerEntry>> {
    let mut out = Vec::new();

    out.push(LedgerEntry::new(
        "knuth-factorial-product",
        "identity knuth-factorial-product",
        "sign (-1)^n",
        "(-1)^(n+1) (n>=1)",
        sign_witness("n=2", &check_knuth_factorial_product(2)),
    ));
    out.push(LedgerEntry::new(
        "romans-identity",
        "identity romans-identity",
        "sign (-1)^(n+k)",
        "(-1)^(n+k+1)",
        sign_witness("n=2, k=0", &check_romans_identity(2, 0)?),
    ));

    for name in TableName::all() {
        let table = build_table(name);
        for note in &table.notes {
            let at = match note.k {
                Some(k) => format!("n={}, k={}", note.n, k),
                None => format!("n={}", note.n),
            };
            let id = format!("{name}-table {at}");
            out.push(LedgerEntry::new(
                &id,
                &format!("table {name}"),
                &note.published,
                &note.derived,
                note_witness(name, note.n, note.k),
            ));
        }
    }

    // Region 5, third form at (2,-2): (-1)^(k+1) / ((n+1) C(n-k-1, n+1)).
    let (n, k) = (2i64, -2i64);
    let printed = neg_one_pow(k + 1) / (int(n + 1) * BigRational::from(binomial(n - k - 1, n + 1)));
    out.push(LedgerEntry::new(
        "region-5 form 3",
        "region-5 closed forms",
        "(-1)^(k+1)/((n+1) C(n-k-1,n+1))",
        "(-1)^(k+1)/((n+1) C(n-k,n+1))",
        mismatch("n=2, k=-2", &printed, &roman_coeff(n, k)),
    ));

    let (n, k) = (-3i64, -2i64);
    let derived = roman_coeff(n, k);
    out.push(LedgerEntry::new(
        "region-6 forms 5-6 sign",
        "region-6 closed forms",
        "sign (-1)^(k+1)",
        "sign (-1)^k",
        mismatch("n=-3, k=-2", &-derived.clone(), &derived),
    ));

    // With multiplier n the series limit is the coefficient scaled by n/n!.
    let (n, k) = (3i64, 4i64);
    let derived = roman_coeff(n, k);
    let printed = &derived * int(n) / BigRational::from(factorial(n as u64));
    out.push(LedgerEntry::new(
        "region-4 stirling multiplier",
        "region-4 Stirling series",
        "multiplier n",
        "multiplier n!",
        mismatch("n=3, k=4", &printed, &derived),
    ));

    let (n, i) = (3u32, 0i64);
    let level = level_resistance(n, i)?;
    let printed_sign = neg_one_pow(n as i64 + i) * roman_coeff(i, n as i64);
    out.push(LedgerEntry::new(
        "level-resistance sign",
        "n-cube level resistance",
        "(-1)^(n+i) (i choose n)",
        "(-1)^(n+i+1) (i choose n)",
        mismatch("n=3, i=0", &printed_sign, &level),
    ));
    let printed_binomial = -roman_coeff(-(n as i64) - 1, 1 - i);
    out.push(LedgerEntry::new(
        "level-resistance binomial",
        "n-cube resistance derivation",
        "-(-n-1 choose 1-i)",
        "-(-n-1 choose -i-1)",
        mismatch("n=3, i=0", &printed_binomial, &level),
    ));

    debug_assert!(out.iter().all(|e| e.published != e.derived));
    Ok(out)
}

pub fn render_ledger(entries: &[LedgerEntry], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json_text(&entries),
        OutputFormat::Csv => {
            let mut out = String::from("id,location,published,derived,witness\n");
            for e in entries {
                let fields = [&e.id, &e.location, &e.published, &e.derived, &e.witness];
                let row: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        OutputFormat::Plain => {
            let mut out = String::new();
            for e in entries {
                out.push_str(&e.headline());
                out.push('\n');
                out.push_str(&format!("    {}; {}\n", e.location, e.witness));
            }
            out
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_entries() {
        let entries = ledger_entries().unwrap();
        let lines: Vec<String> = entries.iter().map(LedgerEntry::headline).collect();
        assert!(
            lines.contains(&"resistance-table n=7: published 151/340, derived 151/420".to_string())
        );
        assert!(lines.contains(
            &"knuth-factorial-product: published sign (-1)^n, derived (-1)^(n+1) (n>=1)"
                .to_string()
        ));
        assert!(lines.contains(
            &"roman-coefficients-table n=2, k=-4: published -1/80, derived -1/60".to_string()
        ));
    }

    #[test]
    fn witnesses_show_disagreement() {
        let entries = ledger_entries().unwrap();
        let by_id = |id: &str| entries.iter().find(|e| e.id == id).unwrap().witness.clone();
        assert_eq!(
            by_id("region-5 form 3"),
            "n=2, k=-2: published form -1/3, coefficient -1/12"
        );
        assert_eq!(
            by_id("region-6 forms 5-6 sign"),
            "n=-3, k=-2: published form 1/2, coefficient -1/2"
        );
        assert_eq!(
            by_id("region-4 stirling multiplier"),
            "n=3, k=4: published form 1/8, coefficient 1/4"
        );
        assert_eq!(
            by_id("level-resistance sign"),
            "n=3, i=0: published form -1/3, coefficient 1/3"
        );
        assert_eq!(
            by_id("resistance-table n=7"),
            "R_7 = (R_6 + 2/7)/2 = (13/30 + 2/7)/2 = 151/420"
        );
        assert_eq!(
            by_id("roman-coefficients-table n=2, k=-4"),
            "[2]!/([-4]! [6]!) = 2/((-1/6)*(720)) = -1/60"
        );
        assert_eq!(
            by_id("knuth-factorial-product"),
            "n=2: product -2, published form 2, derived form -2"
        );
    }

    #[test]
    fn json_is_an_array() {
        let text = render_ledger(&ledger_entries().unwrap(), OutputFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(v.as_array().is_some_and(|a| a.len() >= 9));
    }
}
