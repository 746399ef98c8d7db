//! Plain-text and CSV rendering of result tables.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::model::player_label;
use crate::mse::ErrorReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Plain,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plain" => Ok(Format::Plain),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?} (expected plain or csv)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Number(f64),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Number(x) => fixed6(*x),
        }
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Number(x)
    }
}

/// Renders `x` with six decimals, rounding ties of the exact binary value
/// to even.
pub fn fixed6(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let exact = BigRational::from_float(x).expect("finite float");
    let scaled = exact * BigRational::from_integer(BigInt::from(1_000_000));
    let floor = scaled.floor();
    let frac = &scaled - &floor;
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let mut units = floor.to_integer();
    if frac > half || (frac == half && !(&units % BigInt::from(2)).is_zero()) {
        units += 1;
    }
    let negative = units.is_negative();
    let digits = units.abs().to_string();
    let digits = format!("{digits:0>7}");
    let (int, dec) = digits.split_at(digits.len() - 6);
    let sign = if negative && !units.is_zero() { "-" } else { "" };
    format!("{sign}{int}.{dec}")
}

/// Rows of optional cells under a header; all-empty columns are dropped.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Option<Cell>>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Option<Cell>>) {
        assert_eq!(row.len(), self.headers.len(), "row width must match the header");
        self.rows.push(row);
    }

    pub fn push_cells(&mut self, row: Vec<Cell>) {
        self.push(row.into_iter().map(Some).collect());
    }

    pub fn render(&self, format: Format) -> String {
        let keep: Vec<usize> = (0..self.headers.len())
            .filter(|&k| self.rows.iter().any(|r| r[k].is_some()))
            .collect();
        let mut lines: Vec<Vec<String>> = vec![keep.iter().map(|&k| self.headers[k].clone()).collect()];
        for row in &self.rows {
            lines.push(
                keep.iter()
                    .map(|&k| row[k].as_ref().map(Cell::render).unwrap_or_default())
                    .collect(),
            );
        }
        let mut out = String::new();
        match format {
            Format::Csv => {
                let mut writer = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(Vec::new());
                for line in lines {
                    writer.write_record(&line).expect("writing to memory");
                }
                let bytes = writer.into_inner().expect("writing to memory");
                out = String::from_utf8(bytes).expect("cells are UTF-8");
            }
            Format::Plain => {
                let widths: Vec<usize> = (0..keep.len())
                    .map(|k| lines.iter().map(|l| l[k].chars().count()).max().unwrap_or(0))
                    .collect();
                for line in lines {
                    let padded: Vec<String> = line
                        .iter()
                        .zip(&widths)
                        .map(|(cell, &w)| format!("{cell:<w$}"))
                        .collect();
                    out.push_str(padded.join(" ").trim_end());
                    out.push('\n');
                }
            }
        }
        out
    }
}

/// One row per player, in index order.
pub fn emit_table(report: &ErrorReport, format: Format) -> String {
    let mut table = Table::new(["player", "err"]);
    for (j, &e) in report.errors.iter().enumerate() {
        table.push_cells(vec![player_label(j).into(), e.into()]);
    }
    table.render(format)
}
