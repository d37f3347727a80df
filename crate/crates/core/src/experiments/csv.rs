use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::{PowerFit, ScanRecord};
use crate::error::Result;

pub const CSV_HEADER: &str = "code,n,n_a,samples,mean_s,std_s,i_a,di_dn";

/// Renders scan records. A fit, when present, goes on a leading `#` line.
pub fn format_csv(code: &str, n: usize, records: &[ScanRecord], fit: Option<&PowerFit>) -> String {
    let mut s = String::new();
    if let Some(f) = fit {
        let _ = writeln!(
            s,
            "# gamma={:.6},prefactor={:.6},r_squared={:.6}",
            f.gamma, f.prefactor, f.r_squared
        );
    }
    s.push_str(CSV_HEADER);
    s.push('\n');
    for r in records {
        let _ = write!(
            s,
            "{code},{n},{},{},{:.6},{:.6},{:.6},",
            r.n_a, r.samples, r.mean_s, r.std_s, r.i_a
        );
        if let Some(d) = r.di_dn {
            let _ = write!(s, "{d:.6}");
        }
        s.push('\n');
    }
    s
}

pub fn write_csv(
    path: impl AsRef<Path>,
    code: &str,
    n: usize,
    records: &[ScanRecord],
    fit: Option<&PowerFit>,
) -> Result<()> {
    fs::write(path, format_csv(code, n, records, fit))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_only() {
        assert_eq!(format_csv("t", 8, &[], None), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn one_record() {
        let rec = ScanRecord {
            n_a: 4,
            samples: 10,
            mean_s: 3.0,
            std_s: 0.5,
            i_a: 1.0,
            di_dn: None,
        };
        let text = format_csv("toric-3", 18, &[rec], None);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[1], "toric-3,18,4,10,3.000000,0.500000,1.000000,");
    }

    #[test]
    fn fit_line_and_io_error() {
        let fit = PowerFit {
            gamma: 0.5,
            prefactor: 1.25,
            r_squared: 0.99,
        };
        let text = format_csv("c", 1, &[], Some(&fit));
        assert!(text.starts_with("# gamma=0.500000,prefactor=1.250000,r_squared=0.990000\n"));
        let dir = tempfile::tempdir().unwrap();
        assert!(write_csv(dir.path().join("missing/x.csv"), "c", 1, &[], None).is_err());
    }
}
