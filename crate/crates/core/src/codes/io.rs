//! The `.css` code file format.
//!
//! ```text
//! <name>
//! <n>
//! HX <rows>
//! <one 0/1 line per hx row>
//! HZ <rows>
//! <one 0/1 line per hz row>
//! ```

use std::fs;
use std::path::Path;

use super::CssCode;
use crate::error::{Error, Result};
use crate::gf2::{format_row, parse_row, BitMatrix};

impl CssCode {
    pub fn to_css_string(&self) -> String {
        let mut s = format!("{}\n{}\n", self.name(), self.n());
        for (tag, m) in [("HX", self.hx()), ("HZ", self.hz())] {
            s.push_str(&format!("{tag} {}\n", m.rows()));
            for r in 0..m.rows() {
                format_row(m, r, &mut s);
                s.push('\n');
            }
        }
        s
    }

    pub fn from_css_str(text: &str) -> Result<CssCode> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let mut next = |what: &str| {
            lines
                .next()
                .ok_or_else(|| Error::parse(text.lines().count() + 1, format!("missing {what}")))
        };
        let (_, name) = next("name")?;
        let (line, n_text) = next("qubit count")?;
        let n: usize = n_text
            .parse()
            .map_err(|_| Error::parse(line, format!("bad qubit count {n_text:?}")))?;
        let mut mats = Vec::with_capacity(2);
        for tag in ["HX", "HZ"] {
            let (line, header) = next(tag)?;
            let count = header
                .strip_prefix(tag)
                .map(str::trim)
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| Error::parse(line, format!("expected `{tag} <rows>`")))?;
            let mut rows = Vec::with_capacity(count);
            for _ in 0..count {
                let (line, row) = next("matrix row")?;
                rows.push(parse_row(row, n, line)?);
            }
            mats.push(BitMatrix::from_rows(n, &rows)?);
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::parse(line, "trailing content after HZ block"));
        }
        let hz = mats.pop().expect("two blocks");
        let hx = mats.pop().expect("two blocks");
        CssCode::new(name, hx, hz)
    }

    pub fn read_css(path: impl AsRef<Path>) -> Result<CssCode> {
        Self::from_css_str(&fs::read_to_string(path)?)
    }

    pub fn write_css(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_css_string())?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::hamming_css;

    #[test]
    fn round_trip() {
        let code = hamming_css();
        let text = code.to_css_string();
        assert!(text.starts_with("hamming-7-1-3\n7\nHX 3\n1110100\n"));
        assert_eq!(CssCode::from_css_str(&text).unwrap(), code);
    }

    #[test]
    fn malformed_files_rejected() {
        for bad in [
            "",
            "name\nx\n",
            "name\n3\nHX 1\n101\n",
            "name\n3\nHX 1\n10\nHZ 0\n",
            "name\n3\nHZ 0\nHX 0\n",
            "name\n3\nHX 0\nHZ 0\n111\n",
        ] {
            assert!(
                matches!(CssCode::from_css_str(bad), Err(Error::Parse { .. })),
                "{bad:?}"
            );
        }
    }
}
