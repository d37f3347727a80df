//! Command-line grammar and the resolved run configuration.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "css-entropy", version, about = "Entanglement entropy of CSS codes")]
struct Cli {
    /// Master seed for all randomness.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads for scans.
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: RawCommand,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Toric,
    Bb,
    Qc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Rank,
    Canonical,
    Oracle,
    Identity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SampleMode {
    Random,
    Grown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanMode {
    Scaling,
    Discrepancy,
}

#[derive(Debug, Subcommand)]
enum RawCommand {
    /// Build a code and write it as a .css file.
    Construct {
        #[arg(long)]
        family: Family,
        /// Comma-separated key=value pairs.
        #[arg(long)]
        params: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check commutation and report k.
    Validate {
        #[arg(long)]
        code: PathBuf,
    },
    /// Entanglement entropy of one subsystem.
    Entropy {
        #[arg(long)]
        code: PathBuf,
        /// Comma-separated qubit indices, or @path to a file of them.
        #[arg(long)]
        subsystem: String,
        /// `all`, `none`, or a matrix file of logical rows.
        #[arg(long, default_value = "none")]
        logical: String,
        #[arg(long, value_enum, default_value = "rank")]
        method: Method,
    },
    /// Export the incidence graph of the Z checks.
    Graph {
        #[arg(long)]
        code: PathBuf,
        /// Split heavy columns of the canonical form for `--subsystem`.
        #[arg(long)]
        duplicate: bool,
        #[arg(long)]
        subsystem: Option<String>,
        #[arg(long, default_value = "none")]
        logical: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print subsystems, one per line.
    Sample {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, value_enum)]
        mode: SampleMode,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Run an entropy scan and write CSV.
    Scan {
        #[arg(long)]
        code: Option<PathBuf>,
        #[arg(long, value_enum)]
        mode: Option<ScanMode>,
        #[arg(long)]
        repeats: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        /// `start:stop:step`, inclusive.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// File of `key = value` lines supplying any of the flags.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Compare the rank formula with the dense oracle on random bipartitions.
    OracleCheck {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        count: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subsystem {
    List(Vec<usize>),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Logical {
    None,
    All,
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Construct {
        family: Family,
        params: BTreeMap<String, u64>,
        out: PathBuf,
    },
    Validate {
        code: PathBuf,
    },
    Entropy {
        code: PathBuf,
        subsystem: Subsystem,
        logical: Logical,
        method: Method,
    },
    Graph {
        code: PathBuf,
        duplicate: Option<(Subsystem, Logical)>,
        out: PathBuf,
    },
    Sample {
        code: PathBuf,
        mode: SampleMode,
        size: usize,
        count: usize,
    },
    Scan {
        code: PathBuf,
        mode: ScanMode,
        repeats: usize,
        samples: usize,
        grid: Option<(usize, usize, usize)>,
        out: PathBuf,
    },
    OracleCheck {
        code: PathBuf,
        count: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub seed: u64,
    pub workers: usize,
}

fn number<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("malformed number {value:?} for {key}")))
}

pub fn parse_subsystem(text: &str) -> Result<Subsystem, CliError> {
    if let Some(path) = text.strip_prefix('@') {
        return Ok(Subsystem::File(PathBuf::from(path)));
    }
    parse_index_list(text).map(Subsystem::List)
}

pub fn parse_index_list(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| number("subsystem", t))
        .collect()
}

fn parse_logical(text: &str) -> Logical {
    match text {
        "none" => Logical::None,
        "all" => Logical::All,
        path => Logical::File(PathBuf::from(path)),
    }
}

fn parse_params(text: &str) -> Result<BTreeMap<String, u64>, CliError> {
    let mut out = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected key=value, got {item:?}")))?;
        out.insert(k.trim().to_string(), number(k, v)?);
    }
    Ok(out)
}

pub fn parse_grid(text: &str) -> Result<(usize, usize, usize), CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    let [start, stop, step] = parts[..] else {
        return Err(CliError::Usage(format!("grid must be start:stop:step, got {text:?}")));
    };
    let grid = (number("grid", start)?, number("grid", stop)?, number("grid", step)?);
    if grid.2 == 0 || grid.0 > grid.1 {
        return Err(CliError::Usage(format!("empty grid {text:?}")));
    }
    Ok(grid)
}

/// `key = value` lines; blank lines and `#` comments are skipped.
fn read_config(path: &PathBuf) -> Result<BTreeMap<String, String>, CliError> {
    let text = fs::read_to_string(path)?;
    let mut map = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected key = value", i + 1)))?;
        let key = k.trim().to_string();
        if !matches!(
            key.as_str(),
            "code" | "mode" | "repeats" | "samples" | "grid" | "seed" | "out" | "workers"
        ) {
            return Err(CliError::Usage(format!("config line {}: unknown key {key:?}", i + 1)));
        }
        map.insert(key, v.trim().to_string());
    }
    Ok(map)
}

fn required<T>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("missing required flag --{flag}")))
}

/// Parses a full argument vector, program name first.
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let mut seed = cli.seed;
    let mut workers = cli.workers;
    let command = match cli.command {
        RawCommand::Construct { family, params, out } => Command::Construct {
            family,
            params: parse_params(&params)?,
            out,
        },
        RawCommand::Validate { code } => Command::Validate { code },
        RawCommand::Entropy {
            code,
            subsystem,
            logical,
            method,
        } => Command::Entropy {
            code,
            subsystem: parse_subsystem(&subsystem)?,
            logical: parse_logical(&logical),
            method,
        },
        RawCommand::Graph {
            code,
            duplicate,
            subsystem,
            logical,
            out,
        } => {
            let duplicate = if duplicate {
                let s = required(subsystem, "subsystem")?;
                Some((parse_subsystem(&s)?, parse_logical(&logical)))
            } else {
                None
            };
            Command::Graph { code, duplicate, out }
        }
        RawCommand::Sample {
            code,
            mode,
            size,
            count,
        } => Command::Sample {
            code,
            mode,
            size,
            count,
        },
        RawCommand::Scan {
            code,
            mode,
            repeats,
            samples,
            grid,
            out,
            config,
        } => {
            let file = match &config {
                Some(p) => read_config(p)?,
                None => BTreeMap::new(),
            };
            let from_file = |key: &str| file.get(key).cloned();
            let code = code.or_else(|| from_file("code").map(PathBuf::from));
            let out = out.or_else(|| from_file("out").map(PathBuf::from));
            let mode = match (mode, from_file("mode")) {
                (Some(m), _) => Some(m),
                (None, Some(m)) => Some(
                    ScanMode::from_str(&m, true)
                        .map_err(|_| CliError::Usage(format!("unknown scan mode {m:?}")))?,
                ),
                (None, None) => None,
            };
            let repeats = match (repeats, from_file("repeats")) {
                (Some(r), _) => Some(r),
                (None, Some(r)) => Some(number("repeats", &r)?),
                _ => None,
            };
            let samples = match (samples, from_file("samples")) {
                (Some(s), _) => Some(s),
                (None, Some(s)) => Some(number("samples", &s)?),
                _ => None,
            };
            let grid = grid.or_else(|| from_file("grid"));
            if seed.is_none() {
                seed = from_file("seed").map(|s| number("seed", &s)).transpose()?;
            }
            if workers.is_none() {
                workers = from_file("workers").map(|w| number("workers", &w)).transpose()?;
            }
            let mode = required(mode, "mode")?;
            let code = required(code, "code")?;
            let out = required(out, "out")?;
            let (repeats, samples, grid) = match mode {
                ScanMode::Scaling => (required(repeats, "repeats")?, samples.unwrap_or(0), None),
                ScanMode::Discrepancy => (
                    repeats.unwrap_or(0),
                    required(samples, "samples")?,
                    Some(parse_grid(&required(grid, "grid")?)?),
                ),
            };
            Command::Scan {
                code,
                mode,
                repeats,
                samples,
                grid,
                out,
            }
        }
        RawCommand::OracleCheck { code, count } => Command::OracleCheck { code, count },
    };
    let workers = workers.unwrap_or(1);
    if workers == 0 {
        return Err(CliError::Usage("--workers must be at least 1".into()));
    }
    Ok(RunConfig {
        command,
        seed: seed.unwrap_or(0),
        workers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(line: &str) -> Result<RunConfig, CliError> {
        parse_args(std::iter::once("css-entropy").chain(line.split_whitespace()))
    }

    #[test]
    fn entropy_request() {
        let cfg = parse("entropy --code x.css --subsystem 0,1,2").unwrap();
        assert_eq!(
            cfg.command,
            Command::Entropy {
                code: "x.css".into(),
                subsystem: Subsystem::List(vec![0, 1, 2]),
                logical: Logical::None,
                method: Method::Rank,
            }
        );
        assert_eq!((cfg.seed, cfg.workers), (0, 1));
    }

    #[test]
    fn construct_request() {
        let cfg = parse("construct --family toric --params d=3 --out t.css --seed 4").unwrap();
        assert_eq!(
            cfg.command,
            Command::Construct {
                family: Family::Toric,
                params: BTreeMap::from([("d".to_string(), 3)]),
                out: "t.css".into(),
            }
        );
        assert_eq!(cfg.seed, 4);
    }

    #[test]
    fn usage_errors() {
        for line in [
            "scan --mode scaling",
            "entropy --code x.css --subsystem 0,x",
            "entropy --code x.css --subsystem 0 --bogus",
            "construct --family toric --params d=three --out t.css",
            "scan --code c.css --mode discrepancy --samples 3 --grid 0:10 --out o.csv",
            "graph --code c.css --duplicate --out g.txt",
            "validate --code c.css --workers 0",
        ] {
            let err = parse(line).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{line}");
        }
        let msg = parse("entropy --code x.css --subsystem 0,x").unwrap_err().to_string();
        assert!(msg.contains("\"x\""));
    }

    #[test]
    fn config_file_fills_scan() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("scan.conf");
        fs::write(
            &path,
            "# discrepancy run\ncode = t.css\nmode = discrepancy\nsamples = 5\ngrid = 0:8:4\nseed = 9\nout = o.csv\n",
        )
        .unwrap();
        let cfg = parse(&format!("scan --config {} --samples 7", path.display())).unwrap();
        assert_eq!(cfg.seed, 9);
        assert_eq!(
            cfg.command,
            Command::Scan {
                code: "t.css".into(),
                mode: ScanMode::Discrepancy,
                repeats: 0,
                samples: 7,
                grid: Some((0, 8, 4)),
                out: "o.csv".into(),
            }
        );
    }
}
