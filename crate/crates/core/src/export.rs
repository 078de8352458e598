//! CSV and JSON forms of the p-Kostka matrix and the orbit-number tables.
//!
//! Big integers are always written as full decimal strings in CSV and as
//! exact JSON numbers.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Number, Value};

use crate::error::{Error, Result};
use crate::kostka::KostkaMatrix;
use crate::orbit_numbers::OrbitNumberTable;
use crate::BigNat;

/// One of the three matrices of an orbit-number table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Matrix {
    M,
    K,
    Y,
}

impl Matrix {
    pub fn name(self) -> &'static str {
        match self {
            Matrix::M => "M",
            Matrix::K => "K",
            Matrix::Y => "Y",
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Matrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "M" | "m" => Ok(Matrix::M),
            "K" | "k" => Ok(Matrix::K),
            "Y" | "y" => Ok(Matrix::Y),
            other => Err(Error::InvalidInput(format!(
                "unknown matrix {other:?}; expected M, K or Y"
            ))),
        }
    }
}

fn number(x: &BigNat) -> Value {
    Value::Number(
        x.to_string()
            .parse::<Number>()
            .expect("decimal digits form a JSON number"),
    )
}

fn matrix_value(rows: &[Vec<BigNat>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| Value::Array(r.iter().map(number).collect()))
            .collect(),
    )
}

fn csv_grid(
    corner: &str,
    cols: &[String],
    rows: &[String],
    cells: &[Vec<BigNat>],
) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::InvalidInput(format!("csv: {e}"));
    w.write_record(std::iter::once(corner).chain(cols.iter().map(String::as_str)))
        .map_err(io)?;
    for (head, row) in rows.iter().zip(cells) {
        let mut rec = vec![head.clone()];
        rec.extend(row.iter().map(|x| x.to_string()));
        w.write_record(&rec).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidInput(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv of ASCII fields"))
}

/// CSV with partitions (decreasing lexicographic order) labelling both rows
/// and columns.
pub fn kostka_csv(k: &KostkaMatrix) -> Result<String> {
    let labels: Vec<String> = k.order.iter().map(|l| l.to_string()).collect();
    csv_grid("lambda\\mu", &labels, &labels, &k.entries)
}

/// `{"n", "p", "order", "entries"}`.
pub fn kostka_json(k: &KostkaMatrix) -> Value {
    json!({
        "n": k.n,
        "p": k.p,
        "order": k.order,
        "entries": matrix_value(&k.entries),
    })
}

/// One matrix of the table as CSV; K is labelled by partitions on both axes,
/// M and Y by partitions (rows) and orbit types (columns).
pub fn table_csv(t: &OrbitNumberTable, which: Matrix) -> Result<String> {
    let rows: Vec<String> = t.rows.iter().map(|l| l.to_string()).collect();
    match which {
        Matrix::K => kostka_csv(&t.k),
        Matrix::M | Matrix::Y => {
            let cols: Vec<String> = t.cols.iter().map(|o| o.to_string()).collect();
            let cells = if which == Matrix::M { &t.m } else { &t.y };
            csv_grid("lambda\\O", &cols, &rows, cells)
        }
    }
}

/// `{"n", "p", "order_rows", "order_cols"}` plus one array per requested
/// matrix under its name. K is indexed by `order_rows` on both axes.
pub fn table_json(t: &OrbitNumberTable, emit: &[Matrix]) -> Value {
    let mut v = json!({
        "n": t.n,
        "p": t.p,
        "order_rows": t.rows,
        "order_cols": t.cols,
    });
    for &which in emit {
        let cells = match which {
            Matrix::M => &t.m,
            Matrix::K => &t.k.entries,
            Matrix::Y => &t.y,
        };
        v[which.name()] = matrix_value(cells);
    }
    v
}
