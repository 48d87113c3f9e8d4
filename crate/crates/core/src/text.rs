//! Plain text format for double posets.
//!
//! ```text
//! dp 3
//! r1: 0<1, 0<2
//! r2: 2<1
//! ```
//!
//! Indices are 0-based. The parser closes both relations transitively;
//! the serializer writes the covering pairs of the canonical
//! representative, so equal classes serialize to identical text.

use crate::double_poset::DoublePoset;
use crate::error::{Error, Result};
use crate::poset::Relation;

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// 1-based column of byte offset `offset` within `line`.
fn column_of(line: &str, offset: usize) -> usize {
    line[..offset].chars().count() + 1
}

fn parse_header(line_no: usize, line: &str) -> Result<usize> {
    let trimmed = line.trim_start();
    let lead = line.len() - trimmed.len();
    let rest = trimmed
        .strip_prefix("dp")
        .ok_or_else(|| parse_error(line_no, lead + 1, "expected header `dp <n>`"))?;
    if !rest.starts_with(char::is_whitespace) {
        return Err(parse_error(line_no, lead + 3, "expected whitespace after `dp`"));
    }
    let count = rest.trim();
    count.parse::<usize>().map_err(|_| {
        let col = column_of(line, line.find(count).unwrap_or(lead + 2));
        parse_error(line_no, col, format!("invalid element count {count:?}"))
    })
}

fn parse_relation(line_no: usize, line: &str, label: &str, n: usize) -> Result<Relation> {
    let trimmed = line.trim_start();
    let lead = line.len() - trimmed.len();
    let body = trimmed
        .strip_prefix(label)
        .and_then(|r| r.trim_start().strip_prefix(':'))
        .ok_or_else(|| parse_error(line_no, lead + 1, format!("expected `{label}:`")))?;
    let body_start = line.len() - body.len();
    let mut pairs = Vec::new();
    if !body.trim().is_empty() {
        let mut offset = body_start;
        for item in body.split(',') {
            let item_col = column_of(line, offset + (item.len() - item.trim_start().len()));
            offset += item.len() + 1;
            let (a, b) = item
                .split_once('<')
                .ok_or_else(|| parse_error(line_no, item_col, format!("expected `i<j`, found {:?}", item.trim())))?;
            let parse_index = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| parse_error(line_no, item_col, format!("invalid index {:?}", s.trim())))
            };
            pairs.push((parse_index(a)?, parse_index(b)?));
        }
    }
    Relation::new(n, &pairs)
}

/// Parses a document, validating and closing both orders.
pub fn parse(text: &str) -> Result<DoublePoset> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let last_line = text.lines().count().max(1);
    let mut next = |what: &str| lines.next().ok_or_else(|| parse_error(last_line, 1, format!("missing {what} line")));
    let (ln, header) = next("header")?;
    let n = parse_header(ln, header)?;
    let (ln, first) = next("r1")?;
    let r1 = parse_relation(ln, first, "r1", n)?;
    let (ln, second) = next("r2")?;
    let r2 = parse_relation(ln, second, "r2", n)?;
    if let Some((ln, _)) = lines.next() {
        return Err(parse_error(ln, 1, "unexpected trailing content"));
    }
    DoublePoset::new(r1, r2)
}

fn format_pairs(pairs: &[(usize, usize)]) -> String {
    pairs
        .iter()
        .map(|(i, j)| format!("{i}<{j}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn format_line(label: &str, pairs: &[(usize, usize)]) -> String {
    if pairs.is_empty() {
        format!("{label}:")
    } else {
        format!("{label}: {}", format_pairs(pairs))
    }
}

/// Writes `d` exactly as given (covering pairs, original labels).
pub fn serialize_raw(d: &DoublePoset) -> String {
    format!(
        "dp {}\n{}\n{}\n",
        d.n(),
        format_line("r1", &d.first().covers()),
        format_line("r2", &d.second().covers())
    )
}

/// Writes the canonical representative of `d`'s class.
pub fn serialize(d: &DoublePoset) -> Result<String> {
    Ok(serialize_raw(&d.canonical_form()?.double_poset()))
}
