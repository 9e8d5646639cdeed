//! Command-line front end. `run` returns the process exit code: 0 success,
//! 1 counterexample or failed audit, 2 usage error.

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::counting::cache::ENV_VAR;
use crate::maps::{audit_family, Family, InjectionReport};
use crate::partition::ClassSpec;
use crate::verify::{
    explore_problem1, explore_threshold, verify_bias, verify_cardinality, verify_lemma, verify_lemma_bound, BiasTheorem,
    Lemma, Method, VerdictRecord, VerifyError,
};

/// Largest n accepted for exhaustive enumeration without an override.
pub const ENUM_LIMIT: u32 = 60;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "parity-bias", version, about = "Parity bias in partitions: exact counts, map audits and claim checks")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Worker threads; output does not depend on this.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,
    /// Count cache directory (default: $PARITY_BIAS_CACHE_DIR, else none).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Enum,
    Dp,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Enum => Method::Enum,
            MethodArg::Dp => Method::Dp,
            MethodArg::Both => Method::Both,
        }
    }
}

/// Inclusive `a..b` (or `a..=b`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: u32,
    pub end: u32,
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
        let b = b.strip_prefix('=').unwrap_or(b);
        let start: u32 = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
        let end: u32 = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
        if start > end {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Span { start, end })
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Odd-heavy / even-heavy / balanced counts for a class.
    Count(CountArgs),
    /// Check a theorem, lemma, map family or closed form.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Evidence for the open problems; never fails.
    Explore {
        #[command(subcommand)]
        which: ExploreCmd,
    },
}

#[derive(Args, Debug)]
struct CountArgs {
    /// P, D, Q, DQ, Pm<k>, Dm<k>, optionally followed by {a,b,..}.
    #[arg(long)]
    class: String,
    #[arg(long)]
    n_max: u32,
    #[arg(long, value_enum, default_value_t = MethodArg::Dp)]
    method: MethodArg,
    #[arg(long)]
    allow_large_enum: bool,
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    Theorem {
        theorem: BiasTheorem,
        #[arg(long, default_value = "1..120")]
        n_range: Span,
        #[arg(long, value_enum, default_value_t = MethodArg::Dp)]
        method: MethodArg,
        #[arg(long)]
        allow_large_enum: bool,
    },
    /// L1 and L2 take n; LB takes m.
    Lemma {
        lemma: Lemma,
        #[arg(long)]
        n_range: Option<Span>,
    },
    Maps {
        family: Family,
        #[arg(long, default_value = "1..35")]
        n_range: Span,
    },
    Formulas {
        #[arg(long, default_value = "1..40")]
        n_range: Span,
    },
}

#[derive(Subcommand, Debug)]
enum ExploreCmd {
    Problem1 {
        #[arg(long, default_value = "1..40")]
        m_range: Span,
    },
    Problem2 {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        with_one: bool,
        #[arg(long, default_value_t = 300)]
        horizon: u32,
        /// Emit the per-n verdict trail instead of the candidate row.
        #[arg(long)]
        trail: bool,
    },
}

trait Table: Serialize {
    const HEADER: &'static [&'static str];
}

impl Table for VerdictRecord {
    const HEADER: &'static [&'static str] = &["claim", "n", "holds", "lhs", "rhs", "margin"];
}

#[derive(Serialize)]
struct CountRow {
    n: u32,
    class: String,
    odd_heavy: String,
    even_heavy: String,
    balanced: String,
    total: String,
}

impl Table for CountRow {
    const HEADER: &'static [&'static str] = &["n", "class", "odd_heavy", "even_heavy", "balanced", "total"];
}

#[derive(Serialize)]
struct AuditRow {
    family: Family,
    n: u32,
    domain: usize,
    image: usize,
    residual: usize,
    collisions: usize,
    violations: usize,
}

impl Table for AuditRow {
    const HEADER: &'static [&'static str] = &["family", "n", "domain", "image", "residual", "collisions", "violations"];
}

impl From<&InjectionReport> for AuditRow {
    fn from(r: &InjectionReport) -> Self {
        AuditRow {
            family: r.family,
            n: r.n,
            domain: r.domain_size,
            image: r.image_size,
            residual: r.residual_count,
            collisions: r.collisions.len(),
            violations: r.violation_count(),
        }
    }
}

#[derive(Serialize)]
struct ThresholdRow {
    k: u32,
    set: String,
    horizon: u32,
    candidate: u32,
    tail_holds: bool,
    status: &'static str,
}

impl Table for ThresholdRow {
    const HEADER: &'static [&'static str] = &["k", "set", "horizon", "candidate", "tail_holds", "status"];
}

fn emit<T: Table>(rows: &[T], format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
            w.write_record(T::HEADER)?;
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)
        }
    }
}

struct Ctx<'a> {
    format: Format,
    cache_dir: Option<PathBuf>,
    out: &'a mut Vec<u8>,
    err: &'a mut Vec<u8>,
}

impl Ctx<'_> {
    fn cache(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    fn usage(&mut self, msg: impl fmt::Display) -> io::Result<i32> {
        writeln!(self.err, "error: {msg}")?;
        Ok(EXIT_USAGE)
    }

    fn verdicts(&mut self, rows: &[VerdictRecord], fail_on_claims: bool) -> io::Result<i32> {
        emit(rows, self.format, self.out)?;
        let mut code = EXIT_OK;
        for r in rows.iter().filter(|r| r.is_failure()) {
            if let Some(c) = &r.counterexample {
                writeln!(self.err, "counterexample: {c}")?;
            }
            if fail_on_claims {
                code = EXIT_FAIL;
            }
        }
        Ok(code)
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let jobs = cli.jobs.map_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()), |j| j as usize);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start {jobs} workers: {e}");
            return EXIT_USAGE;
        }
    };
    let cache_dir = cli.cache_dir.clone().or_else(|| std::env::var_os(ENV_VAR).filter(|v| !v.is_empty()).map(PathBuf::from));
    let (mut obuf, mut ebuf) = (Vec::new(), Vec::new());
    let mut ctx = Ctx { format: cli.format, cache_dir, out: &mut obuf, err: &mut ebuf };
    let code = pool.install(|| dispatch(cli.command, &mut ctx)).unwrap_or_else(|e| {
        let _ = writeln!(ebuf, "error: {e}");
        EXIT_FAIL
    });
    if let Err(e) = out.write_all(&obuf).and_then(|_| out.flush()) {
        let _ = writeln!(err, "error: writing output: {e}");
        return EXIT_FAIL;
    }
    let _ = err.write_all(&ebuf);
    code
}

fn dispatch(command: Command, ctx: &mut Ctx<'_>) -> io::Result<i32> {
    match command {
        Command::Count(a) => cmd_count(a, ctx),
        Command::Verify { what } => cmd_verify(what, ctx),
        Command::Explore { which } => cmd_explore(which, ctx),
    }
}

fn disagreement(ctx: &mut Ctx<'_>, e: VerifyError) -> io::Result<i32> {
    writeln!(ctx.err, "internal inconsistency: {e}")?;
    Ok(EXIT_FAIL)
}

fn cmd_count(a: CountArgs, ctx: &mut Ctx<'_>) -> io::Result<i32> {
    let spec = match ClassSpec::parse_name(&a.class) {
        Ok(s) => s,
        Err(e) => return ctx.usage(format!("unknown class {:?}", e.0)),
    };
    let method = Method::from(a.method);
    if method != Method::Dp && a.n_max > ENUM_LIMIT && !a.allow_large_enum {
        return ctx.usage(format!("enumeration refused for n_max > {ENUM_LIMIT}; pass --allow-large-enum or use --method dp"));
    }
    let rows = match crate::verify::count_rows(&spec, 0..=a.n_max, method, ctx.cache()) {
        Ok(r) => r,
        Err(e) => return disagreement(ctx, e),
    };
    let class = spec.name();
    let rows: Vec<CountRow> = rows
        .into_iter()
        .map(|c| CountRow {
            n: c.n,
            class: class.clone(),
            total: c.total().to_string(),
            odd_heavy: c.odd_heavy.to_string(),
            even_heavy: c.even_heavy.to_string(),
            balanced: c.balanced.to_string(),
        })
        .collect();
    emit(&rows, ctx.format, ctx.out)?;
    Ok(EXIT_OK)
}

fn cmd_verify(what: VerifyCmd, ctx: &mut Ctx<'_>) -> io::Result<i32> {
    match what {
        VerifyCmd::Theorem { theorem, n_range, method, allow_large_enum } => {
            let method = Method::from(method);
            if method != Method::Dp && n_range.end > ENUM_LIMIT && !allow_large_enum {
                return ctx.usage(format!("enumeration refused for n > {ENUM_LIMIT}; pass --allow-large-enum or use --method dp"));
            }
            match verify_bias(theorem, n_range.start..=n_range.end, method, ctx.cache()) {
                Ok(rows) => ctx.verdicts(&rows, true),
                Err(e) => disagreement(ctx, e),
            }
        }
        VerifyCmd::Lemma { lemma, n_range } => {
            let rows = lemma_rows(lemma, n_range);
            ctx.verdicts(&rows, true)
        }
        VerifyCmd::Maps { family, n_range } => {
            let reports: Vec<InjectionReport> =
                (n_range.start..=n_range.end).into_par_iter().map(|n| audit_family(n, family)).collect();
            let rows: Vec<AuditRow> = reports.iter().map(AuditRow::from).collect();
            emit(&rows, ctx.format, ctx.out)?;
            let mut code = EXIT_OK;
            for r in reports.iter().filter(|r| !r.clean()) {
                code = EXIT_FAIL;
                describe_audit(r, &mut *ctx.err)?;
            }
            Ok(code)
        }
        VerifyCmd::Formulas { n_range } => {
            let rows: Vec<VerdictRecord> =
                (n_range.start.max(1)..=n_range.end).into_par_iter().flat_map_iter(verify_cardinality).collect();
            ctx.verdicts(&rows, true)
        }
    }
}

fn lemma_rows(lemma: Lemma, span: Option<Span>) -> Vec<VerdictRecord> {
    let (id, floor, parity) = match lemma {
        Lemma::L1 => ("L1", 14, Some(0)),
        Lemma::L2 => ("L2", 9, Some(1)),
        Lemma::LB => ("LB", 7, None),
    };
    let span = span.unwrap_or(match lemma {
        Lemma::L1 => Span { start: 14, end: 2000 },
        Lemma::L2 => Span { start: 9, end: 2001 },
        Lemma::LB => Span { start: 7, end: 1000 },
    });
    let mut rows = Vec::new();
    for n in span.start..=span.end {
        if parity.is_some_and(|p| n % 2 != p) {
            continue;
        }
        if n < floor {
            rows.push(VerdictRecord::skip(id, n));
            continue;
        }
        match lemma {
            Lemma::LB => rows.extend(verify_lemma_bound(n).expect("m checked above")),
            _ => rows.push(verify_lemma(lemma, n).expect("n checked above")),
        }
    }
    rows
}

fn describe_audit(r: &InjectionReport, err: &mut dyn Write) -> io::Result<()> {
    let mut line = format!(
        "{} n={}: {} collisions, {} violations, residual {} (expected {})",
        r.family,
        r.n,
        r.collisions.len(),
        r.violation_count(),
        r.residual_count,
        r.expected_residual
    );
    if let Some(c) = r.collisions.first() {
        line.push_str(&format!("; {} [{}] and {} [{}] both map to {}", c.first, c.first_tag, c.second, c.second_tag, c.image));
    }
    let violations = r.codomain_violations.iter().chain(&r.weight_violations).chain(&r.unmapped);
    if let Some(v) = violations.into_iter().next() {
        line.push_str(&format!("; {}: {}", v.source, v.reason));
    }
    writeln!(err, "{line}")
}

fn cmd_explore(which: ExploreCmd, ctx: &mut Ctx<'_>) -> io::Result<i32> {
    match which {
        ExploreCmd::Problem1 { m_range } => {
            let rows = explore_problem1(m_range.start..=m_range.end, ctx.cache());
            ctx.verdicts(&rows, false)
        }
        ExploreCmd::Problem2 { k, with_one, horizon, trail } => {
            let report = match explore_threshold(k, with_one, horizon, ctx.cache()) {
                Ok(r) => r,
                Err(e) => return ctx.usage(e),
            };
            if trail {
                emit(&report.trail, ctx.format, ctx.out)?;
            } else {
                let row = ThresholdRow {
                    k: report.k,
                    set: report.set,
                    horizon: report.horizon,
                    candidate: report.candidate,
                    tail_holds: report.tail_holds,
                    status: report.status,
                };
                emit(&[row], ctx.format, ctx.out)?;
            }
            Ok(EXIT_OK)
        }
    }
}
