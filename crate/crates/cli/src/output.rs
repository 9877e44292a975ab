use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Value};

use crate::tables::{Columns, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Csv,
    Json,
}

/// Serializes with a trailing newline so every format ends the same way.
pub fn json_text(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output values serialize");
    s.push('\n');
    s
}

pub fn render_table(table: &Table, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => table_plain(table),
        OutputFormat::Csv => table_csv(table),
        OutputFormat::Json => json_text(&table_json(table)),
    }
}

fn headers(table: &Table) -> Vec<String> {
    match &table.columns {
        Columns::K(ks) => ks.iter().map(i64::to_string).collect(),
        Columns::Value => vec!["value".to_string()],
    }
}

fn table_csv(table: &Table) -> String {
    let mut out = String::from("n");
    for h in headers(table) {
        out.push(',');
        out.push_str(&h);
    }
    out.push('\n');
    for row in &table.rows {
        out.push_str(&row.n.to_string());
        for cell in &row.cells {
            out.push(',');
            out.push_str(cell.as_deref().unwrap_or(""));
        }
        out.push('\n');
    }
    out
}

fn table_json(table: &Table) -> Value {
    let keys: Vec<Option<i64>> = match &table.columns {
        Columns::K(ks) => ks.iter().copied().map(Some).collect(),
        Columns::Value => vec![None],
    };
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            let cells: Vec<Value> = keys
                .iter()
                .zip(&row.cells)
                .filter_map(|(k, cell)| {
                    let value = cell.as_ref()?;
                    Some(match k {
                        Some(k) => json!({ "k": k, "value": value }),
                        None => json!({ "value": value }),
                    })
                })
                .collect();
            json!({ "n": row.n, "cells": cells })
        })
        .collect();
    let mut out = json!({ "table": table.name.to_string(), "rows": rows });
    if !table.notes.is_empty() {
        out["notes"] = serde_json::to_value(&table.notes).expect("notes serialize");
    }
    out
}

fn table_plain(table: &Table) -> String {
    let mut grid: Vec<Vec<String>> = Vec::new();
    let mut header = vec![match table.columns {
        Columns::K(_) => "n\\k".to_string(),
        Columns::Value => "n".to_string(),
    }];
    header.extend(headers(table));
    grid.push(header);
    for row in &table.rows {
        let mut line = vec![row.n.to_string()];
        let keys: Vec<Option<i64>> = match &table.columns {
            Columns::K(ks) => ks.iter().copied().map(Some).collect(),
            Columns::Value => vec![None],
        };
        for (k, cell) in keys.iter().zip(&row.cells) {
            let mut text = cell.clone().unwrap_or_default();
            if let Some(note) = table.note_for(row.n, *k) {
                let _ = write!(text, "[{}]", note.marker);
            }
            line.push(text);
        }
        grid.push(line);
    }
    let width = grid.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|c| {
            grid.iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();

    let mut out = format!("{}\n", table.name);
    for (i, line) in grid.iter().enumerate() {
        let cells: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
        if i == 0 {
            let rule: usize = widths.iter().sum::<usize>() + 2 * widths.len().saturating_sub(1);
            out.push_str(&"-".repeat(rule));
            out.push('\n');
        }
    }
    for note in &table.notes {
        let at = match note.k {
            Some(k) => format!("n={}, k={}", note.n, k),
            None => format!("n={}", note.n),
        };
        let _ = writeln!(
            out,
            "[{}] {at}: published {}, derived {} (see `romankit ledger`)",
            note.marker, note.published, note.derived
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::{build_table, TableName};

    #[test]
    fn csv_shape() {
        let csv = render_table(
            &build_table(TableName::RomanCoefficients),
            OutputFormat::Csv,
        );
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 13);
        assert_eq!(lines[0], "n,-4,-3,-2,-1,0,1,2,3,4,5,6");
        assert!(lines.iter().skip(1).all(|l| l.split(',').count() == 12));
        assert!(!csv.contains('\u{2212}'));
    }

    #[test]
    fn plain_marks_notes() {
        let plain = render_table(&build_table(TableName::Resistance), OutputFormat::Plain);
        assert!(plain.contains("151/420[1]"));
        assert!(plain.contains("[1] n=7: published 151/340, derived 151/420"));
    }

    #[test]
    fn json_skips_blank_cells() {
        let text = render_table(
            &build_table(TableName::Region(romankit::Region::R1)),
            OutputFormat::Json,
        );
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["table"], "region-1");
        let first = &v["rows"][0];
        assert_eq!(first["n"], 7);
        assert_eq!(first["cells"].as_array().unwrap().len(), 8);
        let last = &v["rows"][7];
        assert_eq!(last["cells"].as_array().unwrap().len(), 1);
    }
}
