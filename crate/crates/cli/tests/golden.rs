use std::fs;
use std::path::PathBuf;

use romankit_cli::ledger::{ledger_entries, render_ledger};
use romankit_cli::output::{render_table, OutputFormat};
use romankit_cli::tables::{build_table, TableName};

const FORMATS: [(OutputFormat, &str); 3] = [
    (OutputFormat::Plain, "txt"),
    (OutputFormat::Csv, "csv"),
    (OutputFormat::Json, "json"),
];

fn golden(file: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", file]
        .iter()
        .collect();
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn tables_match_golden_files() {
    let mut mismatched = Vec::new();
    for name in TableName::all() {
        let table = build_table(name);
        for (format, ext) in FORMATS {
            let file = format!("{name}.{ext}");
            if render_table(&table, format) != golden(&file) {
                mismatched.push(file);
            }
        }
    }
    assert!(mismatched.is_empty(), "differs from golden: {mismatched:?}");
}

#[test]
fn ledger_matches_golden_files() {
    let entries = ledger_entries().unwrap();
    assert_eq!(
        render_ledger(&entries, OutputFormat::Plain),
        golden("ledger.txt")
    );
    assert_eq!(
        render_ledger(&entries, OutputFormat::Json),
        golden("ledger.json")
    );
}

#[test]
fn rendering_is_deterministic() {
    for name in TableName::all() {
        let a = render_table(&build_table(name), OutputFormat::Json);
        let b = render_table(&build_table(name), OutputFormat::Json);
        assert_eq!(a, b);
    }
}

#[test]
fn machine_formats_are_ascii() {
    for name in TableName::all() {
        for (format, ext) in FORMATS {
            let text = golden(&format!("{name}.{ext}"));
            assert!(text.is_ascii(), "{name}.{ext}");
            if format != OutputFormat::Plain {
                assert!(!text.contains("[1]"), "{name}.{ext}");
            }
        }
    }
}
