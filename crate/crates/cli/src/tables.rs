//! Grids reproducing the reference tables, computed from the definitions.

use std::fmt;
use std::str::FromStr;

use romankit::coeff::{classify_region, gamma_coeff, roman_coeff, Region};
use romankit::cube::resistance_direct;
use romankit::exact::render_rational;
use romankit::factorial::roman_factorial;
use romankit::Error;
use serde::Serialize;

use crate::published::{self, PublishedGrid, PublishedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableName {
    RomanFactorials,
    RomanCoefficients,
    GammaCoefficients,
    Region(Region),
    Resistance,
}

impl TableName {
    pub fn all() -> Vec<TableName> {
        let mut out = vec![
            TableName::RomanFactorials,
            TableName::RomanCoefficients,
            TableName::GammaCoefficients,
        ];
        out.extend(Region::ALL.iter().map(|r| TableName::Region(*r)));
        out.push(TableName::Resistance);
        out
    }
}

impl fmt::Display for TableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableName::RomanFactorials => f.write_str("roman-factorials"),
            TableName::RomanCoefficients => f.write_str("roman-coefficients"),
            TableName::GammaCoefficients => f.write_str("gamma-coefficients"),
            TableName::Region(r) => write!(f, "region-{}", r.index()),
            TableName::Resistance => f.write_str("resistance"),
        }
    }
}

impl FromStr for TableName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TableName::all()
            .into_iter()
            .find(|t| t.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown table `{s}`")))
    }
}

/// Column keys: `k` values for two-argument grids, or one value column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Columns {
    K(Vec<i64>),
    Value,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: i64,
    /// One entry per column; `None` is a blank cell.
    pub cells: Vec<Option<String>>,
}

/// A cell where the computed value differs from the printed one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableNote {
    pub marker: usize,
    pub n: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    pub published: String,
    pub derived: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub name: TableName,
    pub columns: Columns,
    pub rows: Vec<TableRow>,
    pub notes: Vec<TableNote>,
}

impl Table {
    pub fn cell(&self, n: i64, k: Option<i64>) -> Option<&str> {
        let col = match (&self.columns, k) {
            (Columns::K(ks), Some(k)) => ks.iter().position(|c| *c == k)?,
            (Columns::Value, None) => 0,
            _ => return None,
        };
        let row = self.rows.iter().find(|r| r.n == n)?;
        row.cells.get(col)?.as_deref()
    }

    pub fn note_for(&self, n: i64, k: Option<i64>) -> Option<&TableNote> {
        self.notes.iter().find(|note| note.n == n && note.k == k)
    }
}

fn grid_table(
    name: TableName,
    layout: &PublishedGrid,
    value: impl Fn(i64, i64) -> Option<String>,
) -> Table {
    let rows = layout
        .rows
        .iter()
        .map(|(n, _)| TableRow {
            n: *n,
            cells: layout.columns.iter().map(|k| value(*n, *k)).collect(),
        })
        .collect();
    let mut table = Table {
        name,
        columns: Columns::K(layout.columns.to_vec()),
        rows,
        notes: Vec::new(),
    };
    for (n, printed) in layout.rows {
        for (k, text) in layout.columns.iter().zip(printed.iter()) {
            let derived = table.cell(*n, Some(*k)).unwrap_or("");
            if derived != *text {
                let note = TableNote {
                    marker: table.notes.len() + 1,
                    n: *n,
                    k: Some(*k),
                    published: text.to_string(),
                    derived: derived.to_string(),
                };
                table.notes.push(note);
            }
        }
    }
    table
}

fn series_table(name: TableName, layout: &PublishedSeries, value: impl Fn(i64) -> String) -> Table {
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for (n, printed) in layout.values {
        let derived = value(*n);
        if derived != *printed {
            notes.push(TableNote {
                marker: notes.len() + 1,
                n: *n,
                k: None,
                published: printed.to_string(),
                derived: derived.clone(),
            });
        }
        rows.push(TableRow {
            n: *n,
            cells: vec![Some(derived)],
        });
    }
    Table {
        name,
        columns: Columns::Value,
        rows,
        notes,
    }
}

/// Builds a table over the reference layout. Cells are computed; the printed
/// values only feed the notes.
pub fn build_table(name: TableName) -> Table {
    match name {
        TableName::RomanFactorials => series_table(name, &published::ROMAN_FACTORIALS, |n| {
            render_rational(&roman_factorial(n))
        }),
        TableName::Resistance => series_table(name, &published::RESISTANCE, |n| {
            render_rational(&resistance_direct(n as u32).ohms)
        }),
        TableName::RomanCoefficients => grid_table(name, &published::ROMAN_COEFFICIENTS, |n, k| {
            Some(render_rational(&roman_coeff(n, k)))
        }),
        TableName::GammaCoefficients => grid_table(name, &published::GAMMA_COEFFICIENTS, |n, k| {
            Some(gamma_coeff(n, k).to_string())
        }),
        TableName::Region(region) => {
            let layout = match region {
                Region::R1 => &published::REGION_1,
                Region::R2 => &published::REGION_2,
                Region::R3 => &published::REGION_3,
                Region::R4 => &published::REGION_4,
                Region::R5 => &published::REGION_5,
                Region::R6 => &published::REGION_6,
            };
            grid_table(name, layout, |n, k| {
                (classify_region(n, k) == region).then(|| render_rational(&roman_coeff(n, k)))
            })
        }
    }
}
