//! Command-line front end.
//!
//! ```text
//! zic det-region -m 5 -n 3 -C 0 --format json
//! zic gauss-region --snr 100 --inr 25 --cg 0 --theorems 4,5,6
//! zic verify-scheme scheme.txt
//! zic corner-schemes -m 5 -n 3
//! zic correspond -m 10 -n 6 -C 2
//! zic sweep --snr 100 --inr 25 --cg-range 0:3:0.5
//! ```
//!
//! Exit status is 0 on success, 2 on usage or validation errors and 1 on
//! numerical failures. Diagnostics go to the error stream.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::correspondence::correspondence_report;
use crate::det_channel::DetParams;
use crate::det_regions::det_outer_region;
use crate::det_schemes::{corner_scheme_a, corner_scheme_b, evaluate_scheme, parse_scheme};
use crate::gauss_regions::{applicable_theorems, best_outer_region, theorem_bounds, GaussParams, Theorem};
use crate::Error;

pub mod emit;

use emit::{regions_csv, sweep_csv, to_json, GapReportDoc, RegionDoc, SchemeReportDoc, SweepRow};

#[derive(Debug, Parser)]
#[command(
    name = "zic",
    version,
    about = "Secrecy outer bounds for the two-user Z interference channel"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct Output {
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DetArgs {
    /// Direct-link levels (>= 1).
    #[arg(short = 'm')]
    m: u32,
    /// Cross-link levels.
    #[arg(short = 'n')]
    n: u32,
    /// Cooperative-link capacity in bits per use.
    #[arg(short = 'C', long = "coop", default_value_t = 0)]
    c: u32,
}

#[derive(Debug, Args)]
struct GaussArgs {
    /// Linear SNR.
    #[arg(long, conflicts_with = "snr_db", required_unless_present = "snr_db")]
    snr: Option<f64>,
    /// SNR in dB.
    #[arg(long, allow_negative_numbers = true)]
    snr_db: Option<f64>,
    /// Linear INR.
    #[arg(long, conflicts_with = "inr_db", required_unless_present = "inr_db")]
    inr: Option<f64>,
    /// INR in dB.
    #[arg(long, allow_negative_numbers = true)]
    inr_db: Option<f64>,
    /// Cooperative-link capacity in bits per use.
    #[arg(long, default_value_t = 0.0)]
    cg: f64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Deterministic outer-bound region.
    DetRegion {
        #[command(flatten)]
        det: DetArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Gaussian outer-bound regions, one per theorem.
    GaussRegion {
        #[command(flatten)]
        gauss: GaussArgs,
        /// Comma-separated theorem numbers out of 4, 5, 6. Defaults to every
        /// theorem that applies.
        #[arg(long, value_delimiter = ',')]
        theorems: Option<Vec<u8>>,
        /// Also emit the intersection of all applicable bounds.
        #[arg(long)]
        best: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Exhaustively verify a scheme file.
    VerifyScheme {
        /// Scheme file.
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build and verify both corner-point schemes.
    CornerSchemes {
        #[arg(short = 'm')]
        m: u32,
        #[arg(short = 'n')]
        n: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Gaps between the Gaussian bounds and the deterministic bounds.
    Correspond {
        #[command(flatten)]
        det: DetArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Gaussian bound values over a parameter grid.
    Sweep {
        /// Comma-separated linear SNR values.
        #[arg(long, value_delimiter = ',', required = true)]
        snr: Vec<f64>,
        /// Comma-separated linear INR values.
        #[arg(long, value_delimiter = ',', required = true)]
        inr: Vec<f64>,
        /// Comma-separated cooperation capacities.
        #[arg(long, value_delimiter = ',', conflicts_with = "cg_range")]
        cg: Option<Vec<f64>>,
        /// Cooperation capacities as `start:stop:step`, stop included.
        #[arg(long)]
        cg_range: Option<String>,
        /// Comma-separated theorem numbers; defaults to 4,5,6.
        #[arg(long, value_delimiter = ',')]
        theorems: Option<Vec<u8>>,
        #[command(flatten)]
        out: Output,
    },
}

/// Failure of a subcommand, split by exit status.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Numeric(_) | Error::Singular(_) | Error::Geometry(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult<T> = std::result::Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Run the tool on `argv` (program name first). Returns the exit status.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    2
                }
            };
        }
    };
    match execute(cli.command) {
        Ok((text, path)) => match write_out(&text, path, stdout) {
            Ok(()) => 0,
            Err(msg) => {
                let _ = writeln!(stderr, "error: {msg}");
                1
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn write_out(text: &str, path: Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), String> {
    match path {
        Some(p) => fs::write(&p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn det_params(args: &DetArgs) -> CmdResult<DetParams> {
    if args.m == 0 {
        return Err(usage("-m: m must be >= 1"));
    }
    Ok(DetParams::new(args.m, args.n, args.c)?)
}

fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

fn gauss_params(args: &GaussArgs) -> CmdResult<GaussParams> {
    let pick = |lin: Option<f64>, db: Option<f64>, flag: &str| -> CmdResult<f64> {
        let v = lin
            .or(db.map(db_to_linear))
            .ok_or_else(|| usage(format!("--{flag} is required")))?;
        if !v.is_finite() || v < 0.0 {
            return Err(usage(format!("--{flag}: must be finite and >= 0, got {v}")));
        }
        Ok(v)
    };
    let snr = pick(args.snr, args.snr_db, "snr")?;
    let inr = pick(args.inr, args.inr_db, "inr")?;
    if !args.cg.is_finite() || args.cg < 0.0 {
        return Err(usage(format!("--cg: must be finite and >= 0, got {}", args.cg)));
    }
    Ok(GaussParams::new(snr, inr, args.cg)?)
}

fn parse_theorems(list: &[u8]) -> CmdResult<Vec<Theorem>> {
    let mut out: Vec<Theorem> = list
        .iter()
        .map(|&n| {
            Theorem::from_number(n)
                .ok_or_else(|| usage(format!("--theorems: unknown theorem {n}, expected 4, 5 or 6")))
        })
        .collect::<CmdResult<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

fn parse_range(text: &str) -> CmdResult<Vec<f64>> {
    let bad = || usage(format!("--cg-range: expected start:stop:step, got `{text}`"));
    let parts: Vec<f64> = text
        .split(':')
        .map(|s| s.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<CmdResult<_>>()?;
    let [start, stop, step] = parts[..] else {
        return Err(bad());
    };
    if !step.is_finite() || step <= 0.0 || !start.is_finite() || !stop.is_finite() || stop < start {
        return Err(bad());
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    if count > 100_000 {
        return Err(usage("--cg-range: more than 100000 points"));
    }
    Ok((0..count).map(|i| start + i as f64 * step).collect())
}

fn execute(cmd: Command) -> CmdResult<(String, Option<PathBuf>)> {
    match cmd {
        Command::DetRegion { det, out } => {
            let p = det_params(&det)?;
            let doc = RegionDoc::det(&p, &det_outer_region(&p));
            let text = match out.format.unwrap_or(Format::Json) {
                Format::Json => to_json(&doc)?,
                Format::Csv => regions_csv(&[("det".to_owned(), doc)]),
            };
            Ok((text, out.output))
        }
        Command::GaussRegion {
            gauss,
            theorems,
            best,
            out,
        } => {
            let g = gauss_params(&gauss)?;
            let selected = match theorems {
                Some(list) => {
                    let t = parse_theorems(&list)?;
                    if t.contains(&Theorem::SecrecyWeak) && !g.is_weak_moderate() {
                        return Err(usage("--theorems: theorem 5 applies only when INR <= SNR"));
                    }
                    t
                }
                None => applicable_theorems(&g),
            };
            let mut docs = Vec::new();
            for t in selected {
                let region = theorem_bounds(t, &g)?.region()?;
                docs.push((t.label().to_owned(), RegionDoc::gauss(&g, t.label(), &region)));
            }
            if best {
                docs.push((
                    "best".to_owned(),
                    RegionDoc::gauss(&g, "best", &best_outer_region(&g)?),
                ));
            }
            let text = match out.format.unwrap_or(Format::Json) {
                Format::Json => to_json(&docs.iter().map(|(_, d)| d).collect::<Vec<_>>())?,
                Format::Csv => regions_csv(&docs),
            };
            Ok((text, out.output))
        }
        Command::VerifyScheme { file, output } => {
            let text = fs::read_to_string(&file).map_err(|e| usage(format!("{}: {e}", file.display())))?;
            let scheme = parse_scheme(&text).map_err(|e| match e {
                Error::Parse { line, message } => usage(format!("{}:{line}: {message}", file.display())),
                other => Failure::from(other),
            })?;
            let report = evaluate_scheme(&scheme)?;
            Ok((to_json(&SchemeReportDoc::from(&report))?, output))
        }
        Command::CornerSchemes { m, n, output } => {
            if m == 0 {
                return Err(usage("-m: m must be >= 1"));
            }
            let p = DetParams::new(m, n, 0)?;
            if n > m {
                return Err(usage(format!(
                    "-n: corner schemes need n <= m, got n = {n}, m = {m}"
                )));
            }
            let reports: Vec<SchemeReportDoc> = [corner_scheme_a(&p)?, corner_scheme_b(&p)?]
                .iter()
                .map(|s| evaluate_scheme(s).map(|r| SchemeReportDoc::from(&r)))
                .collect::<Result<_, _>>()?;
            Ok((to_json(&reports)?, output))
        }
        Command::Correspond { det, output } => {
            let p = det_params(&det)?;
            let report = correspondence_report(&p)?;
            Ok((to_json(&GapReportDoc::from(&report))?, output))
        }
        Command::Sweep {
            snr,
            inr,
            cg,
            cg_range,
            theorems,
            out,
        } => {
            let cgs = match (cg, cg_range) {
                (Some(v), None) => v,
                (None, Some(r)) => parse_range(&r)?,
                (None, None) => vec![0.0],
                (Some(_), Some(_)) => return Err(usage("--cg conflicts with --cg-range")),
            };
            let selected = parse_theorems(&theorems.unwrap_or_else(|| vec![4, 5, 6]))?;
            // validate every point before computing any
            let mut points = Vec::new();
            for &s in &snr {
                for &i in &inr {
                    for &c in &cgs {
                        let g = GaussParams::new(s, i, c).map_err(|e| usage(format!("sweep point: {e}")))?;
                        points.push(g);
                    }
                }
            }
            let mut rows = Vec::new();
            for g in &points {
                for &t in &selected {
                    if t == Theorem::SecrecyWeak && !g.is_weak_moderate() {
                        continue;
                    }
                    rows.extend(SweepRow::rows(g, &theorem_bounds(t, g)?));
                }
            }
            let text = match out.format.unwrap_or(Format::Csv) {
                Format::Csv => sweep_csv(&rows),
                Format::Json => to_json(&rows)?,
            };
            Ok((text, out.output))
        }
    }
}
