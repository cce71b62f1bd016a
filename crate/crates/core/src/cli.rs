//! The `balcube` command line.
//!
//! Data goes to standard output (and to `--out FILE` when given), diagnostics
//! to standard error. Exit codes: 0 success, 1 a verification failed, 2 usage
//! error. Every flag is validated before any computation starts.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::construct::{
    construct_pair, extremal_size, pair_sizes, verify_constructed, ExtremalPair, CONSTRUCT_MAX_N,
    COUNT_MAX_N,
};
use crate::cube::{Count, VertexSet};
use crate::oracle::{
    check_isoperimetry_exhaustive, check_isoperimetry_sampled, check_terminal_property,
    max_balanced_exhaustive, max_balanced_segment, segment_method_note, SearchResult,
    EXHAUSTIVE_MAX_N, SAMPLED_MAX_N, SAMPLED_MIN_N, SEGMENT_MAX_N, TERMINAL_MAX_N,
};
use crate::report::VerificationReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "balcube",
    version,
    about = "Largest balanced independent sets of the hypercube Q_n"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the extremal pair (A, B) for one n.
    Construct(ConstructArgs),
    /// Build the pair for each n and check all of its claimed properties.
    Verify(VerifyArgs),
    /// Search for the optimum independently and compare with the size formula.
    Oracle(OracleArgs),
    /// Check that initial segments of X_0 have the smallest neighbourhoods.
    Isocheck(IsocheckArgs),
    /// Tabulate the exact extremal sizes by binomial arithmetic.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairFormat {
    Text,
    Json,
    Hex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exhaustive,
    Segment,
    Both,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Also write standard output to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = PairFormat::Text)]
    pub format: PairFormat,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A single n or an inclusive range such as `4..7`.
    #[arg(long)]
    pub n: String,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    pub method: Method,
    /// Include the witness set in the output.
    #[arg(long)]
    pub witness: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct IsocheckArgs {
    #[arg(long)]
    pub n: u32,
    /// Segment length, or `all` for every length.
    #[arg(long)]
    pub m: Option<String>,
    /// Number of random subsets to test (requires --seed).
    #[arg(long)]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Check that X_1 minus N(initial segment) is a terminal segment, for every length.
    #[arg(long, conflicts_with_all = ["m", "samples", "seed"])]
    pub terminal: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 20)]
    pub max_n: u32,
    #[command(flatten)]
    pub output: Output,
}

/// A usage problem detected after parsing.
#[derive(Debug)]
struct Usage(String);

fn usage(msg: impl Into<String>) -> Usage {
    Usage(msg.into())
}

fn check_n(n: u32, max: u32, what: &str) -> Result<(), Usage> {
    if (1..=max).contains(&n) {
        Ok(())
    } else {
        Err(usage(format!(
            "{what}: --n {n} is out of range; valid range is 1..={max}"
        )))
    }
}

/// Parses `7` or the inclusive range `4..7`.
pub fn parse_n_range(s: &str) -> Option<(u32, u32)> {
    match s.split_once("..") {
        Some((lo, hi)) => {
            let lo = lo.trim().parse().ok()?;
            let hi = hi.trim().parse().ok()?;
            (lo <= hi).then_some((lo, hi))
        }
        None => s.trim().parse().ok().map(|n| (n, n)),
    }
}

/// Writes to standard output and, optionally, a file.
struct Tee<'a> {
    primary: &'a mut dyn Write,
    file: Option<BufWriter<File>>,
}

impl Write for Tee<'_> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        self.primary.write_all(buf)?;
        if let Some(f) = &mut self.file {
            f.write_all(buf)?;
        }
        Ok(buf.len())
    }

    fn flush(&mut self) -> io::Result<()> {
        self.primary.flush()?;
        if let Some(f) = &mut self.file {
            f.flush()?;
        }
        Ok(())
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let out_path = match &cli.command {
        Command::Construct(a) => a.output.out.clone(),
        Command::Verify(a) => a.output.out.clone(),
        Command::Oracle(a) => a.output.out.clone(),
        Command::Isocheck(a) => a.output.out.clone(),
        Command::Table(a) => a.output.out.clone(),
    };
    let plan = match plan(&cli.command) {
        Ok(plan) => plan,
        Err(Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let file = match out_path.map(File::create).transpose() {
        Ok(f) => f.map(BufWriter::new),
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot open output file: {e}");
            return EXIT_USAGE;
        }
    };
    let mut out = Tee {
        primary: stdout,
        file,
    };
    let result = execute(plan, &mut out, stderr).and_then(|code| Ok(out.flush().map(|_| code)?));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_FAILED
        }
    }
}

/// A fully validated command.
enum Plan {
    Construct {
        n: u32,
        format: PairFormat,
    },
    Verify {
        lo: u32,
        hi: u32,
        format: ReportFormat,
    },
    Oracle {
        n: u32,
        method: Method,
        witness: bool,
        format: ReportFormat,
    },
    IsoExhaustive {
        n: u32,
        ms: Vec<Count>,
        format: ReportFormat,
    },
    IsoSampled {
        n: u32,
        ms: Vec<Count>,
        samples: u64,
        seed: u64,
        format: ReportFormat,
    },
    IsoTerminal {
        n: u32,
        format: ReportFormat,
    },
    Table {
        max_n: u32,
    },
}

fn parse_m(m: Option<&str>, n: u32) -> Result<Vec<Count>, Usage> {
    let h = 1u64 << (n - 1);
    match m {
        None => Err(usage("isocheck needs --m <length|all> or --terminal")),
        Some("all") => Ok((0..=h).collect()),
        Some(s) => {
            let m: Count = s
                .parse()
                .map_err(|_| usage(format!("--m expects a number or `all`, got `{s}`")))?;
            if m > h {
                return Err(usage(format!("--m {m} exceeds |X_0| = {h} for n = {n}")));
            }
            Ok(vec![m])
        }
    }
}

fn plan(command: &Command) -> Result<Plan, Usage> {
    Ok(match command {
        Command::Construct(a) => {
            check_n(a.n, CONSTRUCT_MAX_N, "construct")?;
            Plan::Construct {
                n: a.n,
                format: a.format,
            }
        }
        Command::Verify(a) => {
            let (lo, hi) = parse_n_range(&a.n)
                .ok_or_else(|| usage(format!("--n expects N or LO..HI, got `{}`", a.n)))?;
            check_n(lo, CONSTRUCT_MAX_N, "verify")?;
            check_n(hi, CONSTRUCT_MAX_N, "verify")?;
            Plan::Verify {
                lo,
                hi,
                format: a.format,
            }
        }
        Command::Oracle(a) => {
            let cap = match a.method {
                Method::Exhaustive | Method::Both => EXHAUSTIVE_MAX_N,
                Method::Segment => SEGMENT_MAX_N,
            };
            check_n(a.n, cap, "oracle")?;
            Plan::Oracle {
                n: a.n,
                method: a.method,
                witness: a.witness,
                format: a.format,
            }
        }
        Command::Isocheck(a) => {
            if a.terminal {
                check_n(a.n, TERMINAL_MAX_N, "isocheck --terminal")?;
                Plan::IsoTerminal {
                    n: a.n,
                    format: a.format,
                }
            } else if let Some(samples) = a.samples {
                let seed = a
                    .seed
                    .ok_or_else(|| usage("--samples requires --seed for reproducibility"))?;
                if samples == 0 {
                    return Err(usage("--samples must be positive"));
                }
                if !(SAMPLED_MIN_N..=SAMPLED_MAX_N).contains(&a.n) {
                    return Err(usage(format!(
                        "isocheck --samples: --n {} is out of range; valid range is {SAMPLED_MIN_N}..={SAMPLED_MAX_N}",
                        a.n
                    )));
                }
                Plan::IsoSampled {
                    n: a.n,
                    ms: parse_m(a.m.as_deref(), a.n)?,
                    samples,
                    seed,
                    format: a.format,
                }
            } else {
                if a.seed.is_some() {
                    return Err(usage("--seed only applies together with --samples"));
                }
                check_n(
                    a.n,
                    EXHAUSTIVE_MAX_N,
                    "isocheck (exhaustive; use --samples and --seed above 5)",
                )?;
                Plan::IsoExhaustive {
                    n: a.n,
                    ms: parse_m(a.m.as_deref(), a.n)?,
                    format: a.format,
                }
            }
        }
        Command::Table(a) => {
            check_n(a.max_n, COUNT_MAX_N, "table --max-n")?;
            Plan::Table { max_n: a.max_n }
        }
    })
}

type CmdResult = Result<i32, Box<dyn std::error::Error>>;

fn execute(plan: Plan, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match plan {
        Plan::Construct { n, format } => {
            let pair = construct_pair(n)?;
            write_pair(&pair, format, out)?;
            Ok(EXIT_OK)
        }
        Plan::Verify { lo, hi, format } => {
            let mut code = EXIT_OK;
            for n in lo..=hi {
                let pair = construct_pair(n)?;
                let report = verify_constructed(&pair);
                if !report.passed() {
                    code = EXIT_FAILED;
                    for c in report.failures() {
                        writeln!(err, "n={n}: {c}")?;
                    }
                }
                write_report(&report, format, out)?;
            }
            Ok(code)
        }
        Plan::Oracle {
            n,
            method,
            witness,
            format,
        } => run_oracle(n, method, witness, format, out),
        Plan::IsoExhaustive { n, ms, format } => {
            let reports = ms
                .into_iter()
                .map(|m| check_isoperimetry_exhaustive(n, m))
                .collect::<crate::Result<Vec<_>>>()?;
            emit_reports(&reports, format, out)
        }
        Plan::IsoSampled {
            n,
            ms,
            samples,
            seed,
            format,
        } => {
            let reports = ms
                .into_iter()
                .map(|m| check_isoperimetry_sampled(n, m, samples, seed))
                .collect::<crate::Result<Vec<_>>>()?;
            emit_reports(&reports, format, out)
        }
        Plan::IsoTerminal { n, format } => {
            emit_reports(&[check_terminal_property(n)?], format, out)
        }
        Plan::Table { max_n } => {
            writeln!(out, "n\tcase\tsize\tA")?;
            for n in 1..=max_n {
                let (a, _) = pair_sizes(n)?;
                writeln!(out, "{n}\t{}\t{}\t{a}", n % 4, extremal_size(n)?)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn emit_reports(
    reports: &[VerificationReport],
    format: ReportFormat,
    out: &mut dyn Write,
) -> CmdResult {
    for r in reports {
        write_report(r, format, out)?;
    }
    Ok(if reports.iter().all(VerificationReport::passed) {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn write_report(
    report: &VerificationReport,
    format: ReportFormat,
    out: &mut dyn Write,
) -> io::Result<()> {
    match format {
        ReportFormat::Text => write!(out, "{report}"),
        ReportFormat::Json => {
            serde_json::to_writer(&mut *out, report)?;
            writeln!(out)
        }
    }
}

fn elements(v: VertexSet) -> Vec<u32> {
    v.elements().collect()
}

fn run_oracle(
    n: u32,
    method: Method,
    witness: bool,
    format: ReportFormat,
    out: &mut dyn Write,
) -> CmdResult {
    let formula = extremal_size(n)?;
    let mut results: Vec<SearchResult> = Vec::new();
    if matches!(method, Method::Exhaustive | Method::Both) {
        results.push(max_balanced_exhaustive(n)?);
    }
    if matches!(method, Method::Segment | Method::Both) {
        results.push(max_balanced_segment(n)?);
    }
    let matched = results.iter().all(|r| r.optimum == formula);
    match format {
        ReportFormat::Text => {
            writeln!(out, "oracle n={n}")?;
            for r in &results {
                writeln!(out, "{:<10}  optimum={}", r.method.name(), r.optimum)?;
                if witness {
                    let sets: Vec<String> = r.witness.iter().map(|v| v.to_string()).collect();
                    writeln!(out, "{:<10}  witness=[{}]", "", sets.join(", "))?;
                }
            }
            if results.iter().any(|r| r.method.name() == "segment") {
                writeln!(out, "# note: {}", segment_method_note())?;
            }
            writeln!(out, "{:<10}  size={formula}", "formula")?;
            writeln!(out, "{}", if matched { "match" } else { "MISMATCH" })?;
        }
        ReportFormat::Json => {
            let entries: Vec<_> = results
                .iter()
                .map(|r| {
                    let mut e = json!({ "method": r.method.name(), "optimum": r.optimum });
                    if witness {
                        e["witness"] = r.witness.iter().map(elements).collect::<Vec<_>>().into();
                    }
                    e
                })
                .collect();
            serde_json::to_writer(
                &mut *out,
                &json!({ "n": n, "formula": formula, "results": entries, "match": matched }),
            )?;
            writeln!(out)?;
        }
    }
    Ok(if matched { EXIT_OK } else { EXIT_FAILED })
}

/// Streams the pair; large `n` never builds the whole document in memory.
fn write_pair(pair: &ExtremalPair, format: PairFormat, out: &mut dyn Write) -> io::Result<()> {
    let mut out = BufWriter::with_capacity(1 << 16, out);
    match format {
        PairFormat::Text => {
            writeln!(
                out,
                "n={} case={} k={} size={}",
                pair.n(),
                pair.case(),
                pair.k(),
                pair.size()
            )?;
            writeln!(out, "A ({}):", pair.a().len())?;
            for v in pair.a_iter() {
                writeln!(out, "{v}")?;
            }
            writeln!(out, "B ({}):", pair.b().len())?;
            for v in pair.b_iter() {
                writeln!(out, "{v}")?;
            }
        }
        PairFormat::Json | PairFormat::Hex => {
            let item = |v: VertexSet, out: &mut dyn Write| -> io::Result<()> {
                if format == PairFormat::Hex {
                    write!(out, "\"{}\"", v.to_hex())
                } else {
                    serde_json::to_writer(&mut *out, &elements(v)).map_err(io::Error::from)
                }
            };
            write!(out, "{{\"n\":{},\"case\":{},\"A\":[", pair.n(), pair.case())?;
            for (i, v) in pair.a_iter().enumerate() {
                if i > 0 {
                    out.write_all(b",")?;
                }
                item(v, &mut out)?;
            }
            out.write_all(b"],\"B\":[")?;
            for (i, v) in pair.b_iter().enumerate() {
                if i > 0 {
                    out.write_all(b",")?;
                }
                item(v, &mut out)?;
            }
            writeln!(out, "],\"size\":{}}}", pair.size())?;
        }
    }
    out.flush()
}
