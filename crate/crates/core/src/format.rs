//! Plain-text formats: `.bck` Cayley tables, Hasse diagrams as DOT, and
//! enumeration catalogs.
//!
//! A `.bck` file is
//!
//! ```text
//! bck 1
//! 3
//! 0 0 0
//! 1 0 0
//! 2 2 0
//! # optional trailing comments
//! ```
//!
//! where row `x` lists `x·0 … x·(n−1)`.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;

use crate::algebra::BckAlgebra;
use crate::classify::Catalog;
use crate::table::{CayleyTable, Element};

pub const HEADER: &str = "bck 1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BckParseErrorKind {
    #[error("expected header {HEADER:?}")]
    BadHeader,
    #[error("expected the order as a positive decimal integer")]
    BadOrder,
    #[error("expected {expected} rows, found {found}")]
    WrongRowCount { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    WrongColumnCount { row: usize, expected: usize, found: usize },
    #[error("non-numeric entry {0:?}")]
    NonNumeric(String),
    #[error("entry {value} out of range at row {row} (order {order})")]
    OutOfRange { row: usize, value: usize, order: usize },
    #[error("unexpected content after the table; only '#' comment lines may follow")]
    TrailingContent,
}

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct BckParseError {
    pub line: usize,
    pub column: usize,
    pub kind: BckParseErrorKind,
}

fn err(line: usize, column: usize, kind: BckParseErrorKind) -> BckParseError {
    BckParseError { line, column, kind }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut col = 1;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        col += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let tok = &trimmed[..end];
        let start = col;
        col += end;
        rest = &trimmed[end..];
        Some((start, tok))
    })
}

pub fn parse_bck(text: &str) -> Result<CayleyTable, BckParseError> {
    let mut lines = text.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l));
    let header = lines.next().unwrap_or("");
    if header.trim() != HEADER {
        return Err(err(1, 1, BckParseErrorKind::BadHeader));
    }
    let order_line = lines.next().ok_or_else(|| err(2, 1, BckParseErrorKind::BadOrder))?;
    let order: usize = match order_line.trim().parse() {
        Ok(n) if n > 0 => n,
        _ => return Err(err(2, 1, BckParseErrorKind::BadOrder)),
    };
    let mut entries: Vec<Element> = Vec::with_capacity(order * order);
    for row in 0..order {
        let line_no = row + 3;
        let line = match lines.next() {
            Some(l) if !l.trim().is_empty() && !l.trim_start().starts_with('#') => l,
            _ => {
                return Err(err(
                    line_no,
                    1,
                    BckParseErrorKind::WrongRowCount {
                        expected: order,
                        found: row,
                    },
                ))
            }
        };
        let mut count = 0;
        for (col, tok) in tokens(line) {
            let value: usize = tok
                .parse()
                .map_err(|_| err(line_no, col, BckParseErrorKind::NonNumeric(tok.to_string())))?;
            if value >= order {
                return Err(err(
                    line_no,
                    col,
                    BckParseErrorKind::OutOfRange {
                        row: row + 1,
                        value,
                        order,
                    },
                ));
            }
            count += 1;
            if count <= order {
                entries.push(value);
            }
        }
        if count != order {
            return Err(err(
                line_no,
                1,
                BckParseErrorKind::WrongColumnCount {
                    row: row + 1,
                    expected: order,
                    found: count,
                },
            ));
        }
    }
    for (i, line) in lines.enumerate() {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let line_no = order + 3 + i;
        let kind = if tokens(line).all(|(_, t)| t.parse::<usize>().is_ok()) {
            BckParseErrorKind::WrongRowCount {
                expected: order,
                found: order + 1,
            }
        } else {
            BckParseErrorKind::TrailingContent
        };
        return Err(err(line_no, 1, kind));
    }
    Ok(CayleyTable::from_flat(order, entries).expect("entries checked while parsing"))
}

pub fn emit_bck(table: &CayleyTable) -> String {
    emit_bck_with_comments(table, &[])
}

/// `emit_bck` followed by `# `-prefixed comment lines.
pub fn emit_bck_with_comments(table: &CayleyTable, comments: &[String]) -> String {
    let mut out = format!("{HEADER}\n{}\n", table.order());
    for row in table.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    out
}

/// The Hasse diagram as a DOT digraph, drawn bottom to top.
pub fn emit_hasse_dot(a: &BckAlgebra) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in 0..a.order() {
        let _ = writeln!(out, "  {x};");
    }
    for (x, y) in a.hasse_covers() {
        let _ = writeln!(out, "  {x} -> {y};");
    }
    out.push_str("}\n");
    out
}

/// File name of class `index` (0-based) in a catalog of `total` classes.
pub fn catalog_file_name(index: usize, total: usize) -> String {
    let width = total.saturating_sub(1).to_string().len().max(4);
    format!("{index:0width$}.bck")
}

pub const MANIFEST_NAME: &str = "manifest.tsv";

/// The manifest: a header line then one tab-separated line per class.
pub fn catalog_manifest(catalog: &Catalog) -> String {
    let mut out = String::from("index\tfile\tdegree\tpairs\tcommutative\tbounded\tpositive_implicative\n");
    let total = catalog.classes.len();
    for (i, c) in catalog.classes.iter().enumerate() {
        let _ = writeln!(
            out,
            "{i}\t{}\t{}\t{}\t{}\t{}\t{}",
            catalog_file_name(i, total),
            c.report.degree,
            c.report.pair_count,
            c.commutative,
            c.bounded,
            c.positive_implicative,
        );
    }
    out
}

/// Writes one `.bck` file per class plus the manifest into `dir`, creating it if needed.
pub fn write_catalog(dir: &Path, catalog: &Catalog) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let total = catalog.classes.len();
    for (i, c) in catalog.classes.iter().enumerate() {
        let comment = format!("degree {}", c.report.describe());
        let text = emit_bck_with_comments(c.algebra.table(), &[comment]);
        fs::write(dir.join(catalog_file_name(i, total)), text)?;
    }
    fs::write(dir.join(MANIFEST_NAME), catalog_manifest(catalog))
}
