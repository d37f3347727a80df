use std::collections::BTreeMap;
use std::fs;
use std::io::Write;

use css_entropy::codes::{build_bb, build_qc, build_toric, validate, BbParams, CssCode, QcParams, ToricParams};
use css_entropy::entropy::{
    canonicalize, dense_oracle, entropy_codespace_identity, entropy_rank, Bipartition, LogicalConstraint,
};
use css_entropy::experiments::{discrepancy_scan, scaling_scan, write_csv};
use css_entropy::gf2::BitMatrix;
use css_entropy::graph::{duplicate_qubits, incidence_graph};
use css_entropy::sampling::{grown_subsystem_sequence_with, random_subsystem_with, seeded_rng};
use rand::Rng;

use crate::args::{parse_index_list, Command, Family, Logical, Method, RunConfig, SampleMode, ScanMode, Subsystem};
use crate::error::CliError;

const ORACLE_TOLERANCE: f64 = 1e-9;

fn take(params: &mut BTreeMap<String, u64>, key: &str) -> Result<u64, CliError> {
    params
        .remove(key)
        .ok_or_else(|| CliError::Usage(format!("missing parameter {key}")))
}

fn construct(family: Family, params: &BTreeMap<String, u64>) -> Result<CssCode, CliError> {
    let mut p = params.clone();
    let code = match family {
        Family::Toric => build_toric(ToricParams::new(take(&mut p, "d")? as usize)?)?,
        Family::Bb => {
            let l = take(&mut p, "l")? as usize;
            let m = take(&mut p, "m")? as usize;
            let mut exps = [0usize; 6];
            for (e, key) in exps.iter_mut().zip(["a", "b", "c", "d", "e", "f"]) {
                *e = take(&mut p, key)? as usize;
            }
            build_bb(BbParams::new(l, m, exps)?)?
        }
        Family::Qc => {
            let prime = take(&mut p, "P")?;
            let sigma = take(&mut p, "sigma")?;
            let tau = take(&mut p, "tau")?;
            let j = p.remove("J");
            let k = p.remove("K");
            let probe = QcParams::new(prime, sigma, tau, 1, 1)?;
            let r = probe.r() as u64;
            build_qc(QcParams::new(
                prime,
                sigma,
                tau,
                j.unwrap_or(r) as usize,
                k.unwrap_or(r) as usize,
            )?)?
        }
    };
    if let Some(key) = p.keys().next() {
        return Err(CliError::Usage(format!("unknown parameter {key:?}")));
    }
    Ok(code)
}

fn load_subsystem(code: &CssCode, s: &Subsystem) -> Result<Bipartition, CliError> {
    let list = match s {
        Subsystem::List(l) => l.clone(),
        Subsystem::File(path) => parse_index_list(&fs::read_to_string(path)?)?,
    };
    Ok(Bipartition::new(code.n(), list)?)
}

fn load_logical(code: &CssCode, l: &Logical) -> Result<Option<LogicalConstraint>, CliError> {
    Ok(match l {
        Logical::None => None,
        Logical::All => Some(LogicalConstraint::all(code)),
        Logical::File(path) => {
            let rows = BitMatrix::from_text(&fs::read_to_string(path)?)?;
            Some(LogicalConstraint::new(code, rows)?)
        }
    })
}

fn checks(code: &CssCode, logical: Option<&LogicalConstraint>) -> Result<BitMatrix, CliError> {
    Ok(match logical {
        None => code.hz().clone(),
        Some(c) => code.hz().vstack(c.rows())?,
    })
}

fn join(indices: &[usize]) -> String {
    indices.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn grid_values((start, stop, step): (usize, usize, usize)) -> Vec<usize> {
    (start..=stop).step_by(step).collect()
}

/// Executes one command, writing its results to `out`.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let seed = config.seed;
    match &config.command {
        Command::Construct { family, params, out: path } => {
            construct(*family, params)?.write_css(path)?;
        }
        Command::Validate { code } => {
            let code = CssCode::read_css(code)?;
            let report = validate(&code);
            writeln!(
                out,
                "commutation={} n={} k={} rank_hx={} rank_hz={}",
                if report.commutes { "PASS" } else { "FAIL" },
                code.n(),
                report.k,
                report.rank_hx,
                report.rank_hz
            )?;
            if !report.passed() {
                return Err(CliError::Failed(format!(
                    "{} anticommuting check pairs",
                    report.anticommuting_pairs.len()
                )));
            }
        }
        Command::Entropy {
            code,
            subsystem,
            logical,
            method,
        } => {
            let code = CssCode::read_css(code)?;
            let part = load_subsystem(&code, subsystem)?;
            let logical = load_logical(&code, logical)?;
            match method {
                Method::Rank => writeln!(out, "S_A={}", entropy_rank(code.hz(), &part, logical.as_ref())?)?,
                Method::Canonical => {
                    let h = checks(&code, logical.as_ref())?;
                    writeln!(out, "S_A={}", canonicalize(&h, &part)?.entropy())?
                }
                Method::Identity => {
                    let h = checks(&code, logical.as_ref())?;
                    writeln!(out, "S_A={}", entropy_codespace_identity(&h, &part)?)?
                }
                Method::Oracle => {
                    let s = dense_oracle(&code, &part, logical.as_ref())?.entropy();
                    writeln!(out, "S_A={s:.6}")?
                }
            }
        }
        Command::Graph {
            code,
            duplicate,
            out: path,
        } => {
            let code = CssCode::read_css(code)?;
            let graph = match duplicate {
                None => incidence_graph(code.hz())?,
                Some((subsystem, logical)) => {
                    let part = load_subsystem(&code, subsystem)?;
                    let logical = load_logical(&code, logical)?;
                    let h = checks(&code, logical.as_ref())?;
                    duplicate_qubits(&canonicalize(&h, &part)?).graph()?
                }
            };
            fs::write(path, graph.to_export_string())?;
        }
        Command::Sample {
            code,
            mode,
            size,
            count,
        } => {
            let code = CssCode::read_css(code)?;
            for i in 0..*count {
                let mut rng = seeded_rng(seed, i as u64);
                let part = match mode {
                    SampleMode::Random => random_subsystem_with(code.n(), *size, &mut rng)?,
                    SampleMode::Grown => grown_subsystem_sequence_with(&code, &mut rng)
                        .into_iter()
                        .find(|p| p.n_a() >= *size)
                        .ok_or_else(|| {
                            CliError::Failed(format!("grown sequence never reaches {size} qubits"))
                        })?,
                };
                writeln!(out, "{}", join(part.a()))?;
            }
        }
        Command::Scan {
            code,
            mode,
            repeats,
            samples,
            grid,
            out: path,
        } => {
            let code = CssCode::read_css(code)?;
            match mode {
                ScanMode::Scaling => {
                    let result = scaling_scan(&code, *repeats, seed, config.workers)?;
                    write_csv(path, code.name(), code.n(), &result.records, result.fit.as_ref())?;
                }
                ScanMode::Discrepancy => {
                    let grid = grid_values(grid.expect("grid is required for discrepancy scans"));
                    let records = discrepancy_scan(&code, &grid, *samples, seed, config.workers)?;
                    write_csv(path, code.name(), code.n(), &records, None)?;
                }
            }
        }
        Command::OracleCheck { code, count } => {
            let code = CssCode::read_css(code)?;
            let mut rng = seeded_rng(seed, 0);
            let mut agree = 0;
            for _ in 0..*count {
                let mask: Vec<bool> = (0..code.n()).map(|_| rng.random_bool(0.5)).collect();
                let part = Bipartition::from_mask(&mask);
                let exact = entropy_rank(code.hz(), &part, None)? as f64;
                let dense = dense_oracle(&code, &part, None)?.entropy();
                if (exact - dense).abs() <= ORACLE_TOLERANCE {
                    agree += 1;
                }
            }
            writeln!(out, "agree={agree}/{count}")?;
            if agree != *count {
                return Err(CliError::Failed(format!("{} disagreements", count - agree)));
            }
        }
    }
    Ok(())
}

/// Parses `argv`, runs, reports errors on standard error and returns the exit code.
pub fn main_with(argv: Vec<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = crate::args::parse_args(argv).and_then(|cfg| run(&cfg, out));
    match result {
        Ok(()) => 0,
        Err(CliError::Clap(e)) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                2
            } else {
                let _ = write!(out, "{}", e.render());
                0
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
