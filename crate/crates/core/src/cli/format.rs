//! `RPC1` coloring files.
//!
//! ```text
//! RPC1 <n> <c>
//! <n-1 digits: colors of (0,1) .. (0,n-1)>
//! <n-2 digits: colors of (1,2) .. (1,n-1)>
//! ...
//! <1 digit: color of (n-2,n-1)>
//! ```
//!
//! `0` marks an uncolored edge. Every line, including the last, ends in
//! `\n`; no other whitespace is allowed.

use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, MAX_VERTICES};
use crate::Color;

pub const MAGIC: &str = "RPC1";
pub const MAX_FILE_COLORS: Color = 9;

fn err(line: usize, column: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        msg: msg.into(),
    }
}

pub fn serialize(col: &EdgeColoring) -> Result<String> {
    if col.colors() > MAX_FILE_COLORS {
        return Err(Error::domain(format!(
            "{} colors do not fit the single-digit format",
            col.colors()
        )));
    }
    let n = col.n();
    let mut out = format!("{MAGIC} {n} {}\n", col.colors());
    for u in 0..n.saturating_sub(1) {
        for v in u + 1..n {
            out.push(char::from(b'0' + col.get(u, v)));
        }
        out.push('\n');
    }
    Ok(out)
}

fn header_number(field: Option<&str>, line: usize, column: usize, what: &str) -> Result<usize> {
    let f = field.ok_or_else(|| err(line, column, format!("missing {what}")))?;
    if f.is_empty() || !f.bytes().all(|b| b.is_ascii_digit()) || (f.len() > 1 && f.starts_with('0'))
    {
        return Err(err(
            line,
            column,
            format!("{what} must be a decimal number, found {f:?}"),
        ));
    }
    f.parse()
        .map_err(|_| err(line, column, format!("{what} is out of range")))
}

pub fn parse(text: &str) -> Result<EdgeColoring> {
    if !text.ends_with('\n') {
        let line = text.split('\n').count();
        let column = text.rsplit('\n').next().map_or(0, str::len) + 1;
        return Err(err(line, column, "missing trailing newline"));
    }
    let lines: Vec<&str> = text[..text.len() - 1].split('\n').collect();

    let header = lines[0];
    let mut fields = header.split(' ');
    if fields.next() != Some(MAGIC) {
        return Err(err(1, 1, format!("header must start with {MAGIC:?}")));
    }
    let n_col = MAGIC.len() + 2;
    let n_field = fields.next();
    let n = header_number(n_field, 1, n_col, "vertex count")?;
    let c_col = n_col + n_field.map_or(0, str::len) + 1;
    let c = header_number(fields.next(), 1, c_col, "color count")?;
    if let Some(extra) = fields.next() {
        let col = header.len() - extra.len() + 1;
        return Err(err(1, col, "unexpected text after header"));
    }
    if n == 0 || n > MAX_VERTICES {
        return Err(err(
            1,
            n_col,
            format!("vertex count must be in 1..={MAX_VERTICES}"),
        ));
    }
    if c == 0 || c > MAX_FILE_COLORS as usize {
        return Err(err(
            1,
            c_col,
            format!("color count must be in 1..={MAX_FILE_COLORS}"),
        ));
    }

    let rows = n - 1;
    if lines.len() - 1 < rows {
        return Err(err(
            lines.len() + 1,
            1,
            format!("expected {rows} rows, found {}", lines.len() - 1),
        ));
    }
    if lines.len() - 1 > rows {
        return Err(err(rows + 2, 1, "unexpected line after the last row"));
    }
    let mut assign = Vec::with_capacity(n * rows / 2);
    for u in 0..rows {
        let line_no = u + 2;
        let row = lines[u + 1].as_bytes();
        let want = n - 1 - u;
        for (i, &b) in row.iter().enumerate() {
            if i >= want {
                return Err(err(
                    line_no,
                    i + 1,
                    format!("row {u} must have {want} digits"),
                ));
            }
            if !b.is_ascii_digit() || (b - b'0') as usize > c {
                return Err(err(
                    line_no,
                    i + 1,
                    format!("expected a color 0..={c}, found {:?}", b as char),
                ));
            }
            assign.push(b - b'0');
        }
        if row.len() < want {
            return Err(err(
                line_no,
                row.len() + 1,
                format!("row {u} must have {want} digits"),
            ));
        }
    }
    EdgeColoring::from_assignments(n, c as Color, assign)
}
