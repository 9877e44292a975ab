//! One test per acceptance criterion. Each prints a PASS/FAIL line (written
//! straight to stdout so it shows up even when libtest captures output).

use std::io::Write;
use std::time::Instant;

use num_traits::{One, Signed, ToPrimitive, Zero};
use romankit::coeff::{
    beta_limit, classify_region, forward_diff_inverse, multinomial_gamma, multinomial_knuth,
    multinomial_roman, region_all_forms, region_closed_form, roman_coeff, scheme_coeff,
    stirling_series_partial, MultiIndex, Region,
};
use romankit::cube::{resistance_direct, resistance_via_roman};
use romankit::exact::{int, ratio, render_rational};
use romankit::factorial::{knuth_factorial, roman_factorial_real, FactorialScheme};
use romankit::identity::{check_pascal_gamma, verify_grid, CoeffFamily, GridBounds, Identity};
use romankit::{BigInt, BigRational, EpsLaurent};
use romankit_cli::ledger::ledger_entries;
use romankit_cli::published::{self, PublishedGrid};
use romankit_cli::tables::{build_table, TableName};

fn report(id: u32, title: &str, started: Instant, budget: Option<f64>, failures: Vec<String>) {
    let secs = started.elapsed().as_secs_f64();
    let mut failures = failures;
    if let Some(b) = budget {
        if secs > b {
            failures.push(format!("took {secs:.2} s, budget {b} s"));
        }
    }
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    let budget = budget
        .map(|b| format!(", budget {b} s"))
        .unwrap_or_default();
    let mut out = std::io::stdout().lock();
    let _ = writeln!(
        out,
        "criterion {id:>2} {title}: {status} ({secs:.2} s{budget})"
    );
    for f in failures.iter().take(10) {
        let _ = writeln!(out, "    {f}");
    }
    drop(out);
    assert!(
        failures.is_empty(),
        "criterion {id}: {} failure(s)",
        failures.len()
    );
}

fn fact(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n!` for `n >= 0`, `(-1)^(n+1) / (-n-1)!` below.
fn oracle_factorial(n: i64) -> BigRational {
    if n >= 0 {
        BigRational::from(fact(n))
    } else {
        let sign = if (n + 1) % 2 == 0 { 1 } else { -1 };
        BigRational::new(BigInt::from(sign), fact(-n - 1))
    }
}

fn oracle_coeff(n: i64, k: i64) -> BigRational {
    oracle_factorial(n) / (oracle_factorial(k) * oracle_factorial(n - k))
}

fn square(lo: i64, hi: i64) -> impl Iterator<Item = (i64, i64)> {
    (lo..=hi).flat_map(move |n| (lo..=hi).map(move |k| (n, k)))
}

fn grid_mismatches(name: TableName, layout: &PublishedGrid) -> Vec<(i64, i64, String, String)> {
    let table = build_table(name);
    let mut out = Vec::new();
    for (n, printed) in layout.rows {
        for (k, text) in layout.columns.iter().zip(printed.iter()) {
            let got = table.cell(*n, Some(*k)).unwrap_or("");
            if got != *text {
                out.push((*n, *k, text.to_string(), got.to_string()));
            }
        }
    }
    out
}

#[test]
fn criterion_01_table_reproduction() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let ledger: Vec<String> = ledger_entries()
        .unwrap()
        .into_iter()
        .map(|e| e.id)
        .collect();

    let factorials = build_table(TableName::RomanFactorials);
    let mut matched = 0;
    for (n, printed) in published::ROMAN_FACTORIALS.values {
        if factorials.cell(*n, None) == Some(*printed) {
            matched += 1;
        } else {
            failures.push(format!("roman-factorials n={n}: published {printed}"));
        }
    }
    if matched != 13 {
        failures.push(format!("roman-factorials matched {matched}/13"));
    }

    let grids = [
        (
            TableName::RomanCoefficients,
            &published::ROMAN_COEFFICIENTS,
            1,
        ),
        (
            TableName::GammaCoefficients,
            &published::GAMMA_COEFFICIENTS,
            0,
        ),
        (TableName::Region(Region::R1), &published::REGION_1, 0),
        (TableName::Region(Region::R2), &published::REGION_2, 0),
        (TableName::Region(Region::R3), &published::REGION_3, 0),
        (TableName::Region(Region::R4), &published::REGION_4, 0),
        (TableName::Region(Region::R5), &published::REGION_5, 1),
        (TableName::Region(Region::R6), &published::REGION_6, 0),
    ];
    for (name, layout, allowed) in grids {
        let cells: usize = layout.rows.iter().map(|(_, r)| r.len()).sum();
        if name == TableName::RomanCoefficients || name == TableName::GammaCoefficients {
            assert_eq!(cells, 132, "{name} layout");
        }
        let bad = grid_mismatches(name, layout);
        if bad.len() > allowed {
            failures.push(format!("{name}: {} mismatched cells", bad.len()));
        }
        for (n, k, printed, got) in bad {
            // Every tolerated mismatch must be the definitional value and ledgered.
            if got != render_rational(&oracle_coeff(n, k)) {
                failures.push(format!(
                    "{name} ({n},{k}): {got} is not the definitional value"
                ));
            }
            let id = format!("{name}-table n={n}, k={k}");
            if !ledger.contains(&id) {
                failures.push(format!(
                    "{name} ({n},{k}): published {printed} not in ledger"
                ));
            }
        }
    }
    report(1, "table reproduction", started, Some(1.0), failures);
}

#[test]
fn criterion_02_definitional_equivalence() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut pairs = 0;
    for (n, k) in square(-60, 60) {
        pairs += 1;
        let closed = region_closed_form(n, k);
        if closed != roman_coeff(n, k) || closed != oracle_coeff(n, k) {
            failures.push(format!("({n},{k}): closed form {closed}"));
        }
    }
    assert_eq!(pairs, 14_641);
    report(
        2,
        "definitional equivalence on [-60,60]^2",
        started,
        Some(5.0),
        failures,
    );
}

#[test]
fn criterion_03_all_forms_equivalence() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for (n, k) in square(-25, 25) {
        let want = oracle_coeff(n, k);
        let forms = region_all_forms(n, k);
        let expected_len = match classify_region(n, k) {
            Region::R1 | Region::R2 | Region::R3 => 1,
            Region::R4 => 4,
            Region::R5 | Region::R6 => 6,
        };
        if forms.len() != expected_len {
            failures.push(format!("({n},{k}): {} forms", forms.len()));
        }
        for (i, f) in forms.iter().enumerate() {
            if *f != want {
                failures.push(format!("({n},{k}) form {}: {f} != {want}", i + 1));
            }
        }
    }
    report(
        3,
        "all-forms equivalence on [-25,25]^2",
        started,
        None,
        failures,
    );
}

#[test]
fn criterion_04_identity_sweeps() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut sweep = |identity: Identity, lo: i64, hi: i64, family: &str| {
        let family: CoeffFamily = family.parse().unwrap();
        let report = verify_grid(identity, GridBounds::new(lo, hi), &family).unwrap();
        if report.applicable == 0 || report.failed > 0 {
            failures.push(format!(
                "{identity} [{lo},{hi}] {family}: {} of {} failed",
                report.failed, report.applicable
            ));
        }
        report
    };
    for family in ["roman", "knuth", "trivial", "q:2", "q:3/2"] {
        sweep(Identity::Complementation, -40, 40, family);
    }
    sweep(Identity::Iterative, -15, 15, "roman");
    sweep(Identity::Iterative, -15, 15, "gamma");
    sweep(Identity::Pascal, -30, 30, "roman");
    sweep(Identity::Pascal, -30, 30, "knuth");
    let pg = sweep(Identity::PascalGamma, -30, 30, "gamma");
    sweep(Identity::RotationReflection, -30, 30, "roman");
    sweep(Identity::CorollarySum, -12, 12, "roman");
    sweep(Identity::RomansIdentity, -25, 25, "roman");
    sweep(Identity::KnuthFactorialProduct, -50, 50, "roman");

    if pg.applicable != 61 * 61 - 1 {
        failures.push(format!("pascal-gamma applicable count {}", pg.applicable));
    }
    let origin = check_pascal_gamma(0, 0);
    if origin.applicable || origin.lhs != "1" || origin.rhs != "2" {
        failures.push(format!("pascal-gamma origin: {origin:?}"));
    }
    report(4, "identity sweeps", started, Some(60.0), failures);
}

/// Every sequence of length 1..=max_len with parts in `lo..=hi`.
fn sequences(max_len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut all = Vec::new();
    let mut layer: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|s| {
                (lo..=hi).map(move |p| {
                    let mut t = s.clone();
                    t.push(p);
                    t
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn knuth_oracle(n: i64, k: i64) -> EpsLaurent {
    let denom = &knuth_factorial(k) * &knuth_factorial(n - k);
    knuth_factorial(n).checked_div(&denom).unwrap()
}

#[test]
fn criterion_05_multinomial() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let worked = multinomial_roman(3, &MultiIndex::new(vec![2, 2, -1]));
    if worked != ratio(3, 2) {
        failures.push(format!("(3; 2,2,-1) = {worked}"));
    }

    for parts in sequences(3, -5, 5) {
        let beta = MultiIndex::new(parts.clone());
        let n: i64 = parts.iter().sum();

        for a in -8..=8 {
            match multinomial_gamma(a, &beta) {
                Ok(_) => {}
                Err(e) => failures.push(format!("gamma ({a}; {beta}): {e}")),
            }
        }
        if !(-8..=8).contains(&n) {
            continue;
        }

        // Products over prefixes: m-th factor is (k_1 + ... + k_m choose k_m).
        let mut roman = BigRational::one();
        let mut knuth = EpsLaurent::one();
        let mut prefix = parts[0];
        for &k in &parts[1..] {
            prefix += k;
            roman *= oracle_coeff(prefix, k);
            knuth = &knuth * &knuth_oracle(prefix, k);
        }
        let gamma = knuth.limit_at_zero().unwrap();
        let direct = oracle_factorial(n)
            / parts
                .iter()
                .map(|&p| oracle_factorial(p))
                .product::<BigRational>();

        if multinomial_roman(n, &beta) != roman || roman != direct {
            failures.push(format!("roman iterative rule ({n}; {beta})"));
        }
        match multinomial_knuth(n, &beta) {
            Ok(v) if v == knuth => {}
            other => failures.push(format!("knuth iterative rule ({n}; {beta}): {other:?}")),
        }
        match multinomial_gamma(n, &beta) {
            Ok(v) if BigRational::from(v.clone()) == gamma => {}
            other => failures.push(format!("gamma iterative rule ({n}; {beta}): {other:?}")),
        }
    }
    report(5, "multinomial", started, None, failures);
}

fn abs_f64(x: &BigRational) -> f64 {
    x.abs().to_f64().unwrap()
}

#[test]
fn criterion_06_stirling_series() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=6 {
        for k in n + 1..=10 {
            let exact = oracle_coeff(n, k);
            let err = |terms| abs_f64(&(stirling_series_partial(n, k, terms).unwrap() - &exact));
            let (e40, e80) = (err(40), err(80));
            if e80 >= 1e-6 {
                failures.push(format!("({n},{k}): error at 80 terms {e80:.3e} >= 1e-6"));
            }
            if e80 >= e40 {
                failures.push(format!(
                    "({n},{k}): error at 80 terms {e80:.3e} >= at 40 {e40:.3e}"
                ));
            }
        }
    }
    report(6, "Stirling series convergence", started, None, failures);
}

#[test]
fn criterion_07_beta_and_difference_forms() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for n in 0..=6 {
        for k in -6..=-1 {
            let beta = -beta_limit(k - n, -k).unwrap();
            if beta != oracle_coeff(n, k) {
                failures.push(format!("beta ({n},{k}): {beta}"));
            }
        }
    }
    let mut counts = [0usize; 3];
    for (n, k) in square(-12, 12) {
        let want = oracle_coeff(n, k);
        let (slot, got) = match classify_region(n, k) {
            Region::R4 => (0, sign(n + k) * forward_diff_inverse(n, &int(k)).unwrap()),
            Region::R5 => (1, sign(k) * forward_diff_inverse(n, &int(n - k)).unwrap()),
            Region::R6 => (2, forward_diff_inverse(k - n - 1, &int(-(n + 1))).unwrap()),
            _ => continue,
        };
        counts[slot] += 1;
        if got != want {
            failures.push(format!("difference form ({n},{k}): {got} != {want}"));
        }
    }
    if counts.contains(&0) {
        failures.push(format!("empty region among {counts:?}"));
    }
    report(
        7,
        "Beta and forward-difference forms",
        started,
        None,
        failures,
    );
}

fn sign(e: i64) -> BigRational {
    if e.rem_euclid(2) == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

#[test]
fn criterion_08_resistance() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for (n, printed) in published::RESISTANCE.values {
        let got = render_rational(&resistance_direct(*n as u32).ohms);
        let want = if *n == 7 { "151/420" } else { *printed };
        if got != want {
            failures.push(format!("R_{n} = {got}, expected {want}"));
        }
    }
    let ledgered = ledger_entries()
        .unwrap()
        .iter()
        .any(|e| e.id == "resistance-table n=7" && e.published == "151/340");
    if !ledgered {
        failures.push("R_7 published value missing from ledger".into());
    }

    let mut prev = BigRational::zero();
    for n in 1..=200u32 {
        let direct = resistance_direct(n).ohms;
        if &direct * int(2) != &prev + ratio(2, n as i64) {
            failures.push(format!("recurrence fails at n={n}"));
        }
        if n <= 64 && resistance_via_roman(n).unwrap().ohms != direct {
            failures.push(format!("Roman route differs at n={n}"));
        }
        prev = direct;
    }
    let r100 = resistance_direct(100).ohms * int(100) - int(2);
    if abs_f64(&r100) >= 0.1 {
        failures.push(format!("|100 R_100 - 2| = {}", abs_f64(&r100)));
    }
    report(8, "n-cube resistance", started, Some(1.0), failures);
}

#[test]
fn criterion_09_q_analog() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let q = int(2);
    let scheme = FactorialScheme::q(q.clone()).unwrap();
    let bracket = |m: i64| {
        (0..m)
            .map(|i| num_traits::pow(q.clone(), i as usize))
            .sum::<BigRational>()
    };
    for n in 0..=8 {
        for k in 0..=n {
            let num: BigRational = (1..=k).map(|i| bracket(n - k + i)).product();
            let den: BigRational = (1..=k).map(bracket).product();
            let want = EpsLaurent::constant(num / den);
            let got = scheme_coeff(&scheme, n, k).unwrap();
            if got != want {
                failures.push(format!("({n},{k}): {got} != {want}"));
            }
        }
    }
    if scheme_coeff(&scheme, 4, 2).unwrap() != EpsLaurent::constant(int(35)) {
        failures.push("(4,2) is not 35".into());
    }
    report(9, "q-analog Gaussian binomials", started, None, failures);
}

#[test]
#[allow(clippy::excessive_precision)]
fn criterion_10_real_path() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let rel = |got: f64, want: f64| ((got - want) / want).abs();
    for n in -20..=20i64 {
        let want = oracle_factorial(n).to_f64().unwrap();
        let got = roman_factorial_real(n as f64).unwrap();
        if rel(got, want) >= 1e-10 {
            failures.push(format!("a={n}: {got} vs {want}"));
        }
    }
    // Gamma(a + 1) to 30 digits.
    for (a, want) in [
        (0.5, 0.886_226_925_452_758_013_649_083_741_671),
        (2.5, 3.323_350_970_447_842_551_184_064_031_27),
        (-0.5, 1.772_453_850_905_516_027_298_167_483_34),
    ] {
        let got = roman_factorial_real(a).unwrap();
        if rel(got, want) >= 1e-10 {
            failures.push(format!("a={a}: {got} vs {want}"));
        }
    }
    report(10, "real-argument factorial", started, None, failures);
}
