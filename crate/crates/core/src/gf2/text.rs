//! Plain-text matrix format: a `rows cols` header followed by one line of
//! `0`/`1` characters per row.

use std::fmt::Write as _;

use super::bits::BitMatrix;
use crate::error::{Error, Result};

/// Parses one row of `0`/`1` characters. `line_no` is used for error reporting.
pub(crate) fn parse_row(text: &str, cols: usize, line_no: usize) -> Result<Vec<u8>> {
    let bytes = text.trim().as_bytes();
    if bytes.len() != cols {
        return Err(Error::parse(
            line_no,
            format!("row has {} entries, expected {cols}", bytes.len()),
        ));
    }
    bytes
        .iter()
        .map(|&b| match b {
            b'0' => Ok(0),
            b'1' => Ok(1),
            other => Err(Error::parse(
                line_no,
                format!("unexpected character {:?}", other as char),
            )),
        })
        .collect()
}

pub(crate) fn format_row(m: &BitMatrix, r: usize, out: &mut String) {
    for c in 0..m.cols() {
        out.push(if m.get(r, c) { '1' } else { '0' });
    }
}

impl BitMatrix {
    /// Renders the matrix in the text format, newline-terminated.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.rows(), self.cols());
        for r in 0..self.rows() {
            format_row(self, r, &mut s);
            s.push('\n');
        }
        s
    }

    /// Parses the text format. Rows of the wrong length are rejected.
    pub fn from_text(text: &str) -> Result<BitMatrix> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty())
            .ok_or_else(|| Error::parse(1, "missing header"))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::parse(1, format!("bad dimension {t:?}")))
            })
            .collect::<Result<_>>()?;
        let [rows, cols] = dims[..] else {
            return Err(Error::parse(1, "header must be `rows cols`"));
        };
        let mut data = Vec::with_capacity(rows);
        for (i, line) in lines {
            if data.len() == rows {
                if line.trim().is_empty() {
                    continue;
                }
                return Err(Error::parse(i + 1, "more rows than declared"));
            }
            data.push(parse_row(line, cols, i + 1)?);
        }
        if data.len() != rows {
            return Err(Error::parse(
                text.lines().count(),
                format!("expected {rows} rows, found {}", data.len()),
            ));
        }
        BitMatrix::from_rows(cols, &data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let m = BitMatrix::from_rows(3, &[[1u8, 0, 1], [0, 1, 1]]).unwrap();
        let t = m.to_text();
        assert_eq!(t, "2 3\n101\n011\n");
        assert_eq!(BitMatrix::from_text(&t).unwrap(), m);
    }

    #[test]
    fn ragged_and_garbage_rejected() {
        assert!(BitMatrix::from_text("2 3\n101\n01\n").is_err());
        assert!(BitMatrix::from_text("1 3\n1a1\n").is_err());
        assert!(BitMatrix::from_text("2 3\n101\n").is_err());
        assert!(BitMatrix::from_text("1 3\n101\n111\n").is_err());
        assert!(BitMatrix::from_text("").is_err());
    }

    #[test]
    fn empty_shapes() {
        let m = BitMatrix::from_text("0 4\n").unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 4));
    }
}
