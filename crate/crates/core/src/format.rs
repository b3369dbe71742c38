//! Text formats: the `TRN1` tournament file and Hamilton-cycle certificates.
//!
//! ```text
//! TRN1 3
//! 010
//! 001
//! 100
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::tournament::{validate, Tournament, MAX_ORDER};

const MAGIC: &str = "TRN1";

/// Parses a `TRN1` document. Line numbers in errors are 1-based.
///
/// A single trailing newline is accepted; anything else after the last row
/// is rejected.
pub fn parse_trn1(text: &str) -> Result<Tournament> {
    let mut lines = text.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l));
    let header = lines.next().unwrap_or("");
    let n = parse_header(header)?;

    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let line_no = i + 2;
        let line = lines.next().ok_or_else(|| Error::Parse {
            line: line_no,
            msg: format!("expected {n} matrix rows, found {i}"),
        })?;
        if line.len() != n {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("row has {} characters, expected {n}", line.chars().count()),
            });
        }
        let row = line
            .bytes()
            .enumerate()
            .map(|(col, b)| match b {
                b'0' => Ok(0u8),
                b'1' => Ok(1u8),
                _ => Err(Error::Parse {
                    line: line_no,
                    msg: format!("column {}: expected '0' or '1'", col + 1),
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        rows.push(row);
    }

    match (lines.next(), lines.next()) {
        (None, _) | (Some(""), None) => {}
        _ => {
            return Err(Error::Parse {
                line: n + 2,
                msg: "trailing content after matrix".into(),
            })
        }
    }
    validate(&rows)
}

fn parse_header(header: &str) -> Result<usize> {
    let bad = |msg: String| Error::Parse { line: 1, msg };
    let mut fields = header.split(' ');
    if fields.next() != Some(MAGIC) {
        return Err(bad(format!("expected header `{MAGIC} <n>`")));
    }
    let n = fields
        .next()
        .and_then(|f| f.parse::<usize>().ok())
        .ok_or_else(|| bad("missing or malformed vertex count".into()))?;
    if fields.next().is_some() {
        return Err(bad("unexpected fields after vertex count".into()));
    }
    if n == 0 || n > MAX_ORDER {
        return Err(bad(format!("vertex count {n} outside 1..={MAX_ORDER}")));
    }
    Ok(n)
}

/// Serializes a tournament as `TRN1`, newline-terminated.
pub fn write_trn1(t: &Tournament) -> String {
    let n = t.order();
    let mut out = String::with_capacity((n + 1) * (n + 1) + 12);
    let _ = writeln!(out, "{MAGIC} {n}");
    for i in 0..n {
        out.extend((0..n).map(|j| if t.has_edge(i, j) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

/// One line of comma-separated vertex indices.
pub fn format_certificate(order: &[usize]) -> String {
    let mut out = String::new();
    for (i, v) in order.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{v}");
    }
    out
}

/// Parses a certificate line. Surrounding whitespace is ignored.
pub fn parse_certificate(text: &str) -> Result<Vec<usize>> {
    let body = text.trim();
    if body.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "empty certificate".into(),
        });
    }
    if body.contains('\n') {
        return Err(Error::Parse {
            line: 2,
            msg: "certificate must be a single line".into(),
        });
    }
    body.split(',')
        .enumerate()
        .map(|(pos, field)| {
            field.trim().parse::<usize>().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("entry {pos} is not a vertex index: {field:?}"),
            })
        })
        .collect()
}
