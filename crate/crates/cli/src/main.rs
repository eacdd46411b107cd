mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use cubicsolve::report::{OutputRecord, RecordOptions};
use cubicsolve::{
    denest, parse_cubic, parse_scalar, CubeRootBranch, Error, ExactRational, GeneralCubic, Method,
    NestedRadical, SolveOptions,
};

const EXIT_USAGE: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

#[derive(Parser)]
#[command(name = "cubicsolve", version, about = "Solve real cubic equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a cubic given as an expression, as (p, q), or as coefficients.
    Solve(SolveArgs),
    /// Simplify cbrt(a + sqrt(b)) + cbrt(a - sqrt(b)).
    Denest(DenestArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Chen,
    Cardano,
    Moebius,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Trig,
    Exact,
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Principal,
    Real,
}

#[derive(Args)]
struct SolveArgs {
    /// Expression such as "x^3 - 6x - 9 = 0".
    #[arg(long, allow_hyphen_values = true)]
    expr: Option<String>,
    /// Depressed-cubic coefficient p of x^3 + p*x + q.
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Leading coefficient (default 1) for --a/--b/--c.
    #[arg(long, allow_hyphen_values = true)]
    lead: Option<String>,
    /// Coefficient of x^2.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Coefficient of x.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Constant term.
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    /// File with one expression per line; emits one JSON line per input.
    #[arg(long)]
    batch: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "chen")]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Significant digits in text output.
    #[arg(long, default_value_t = 12)]
    precision: usize,
    /// Apply one Newton step to each root.
    #[arg(long)]
    polish: bool,
    /// Evaluate the unified root expression on this cube-root branch.
    #[arg(long, value_enum)]
    branch: Option<BranchArg>,
    /// Attach a verification report; exit 3 when it fails.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct DenestArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, default_value_t = 12)]
    precision: usize,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
}

fn describe(err: &Error, source: Option<&str>) -> Failure {
    let code = match err {
        Error::NumericFailure(_) => EXIT_NUMERIC,
        _ => EXIT_USAGE,
    };
    let mut message = err.to_string();
    if let (Error::Parse { position, .. }, Some(src)) = (err, source) {
        message = format!("{message}\n  {src}\n  {}^", " ".repeat(*position));
    }
    Failure { code, message }
}

fn scalar(text: &str, name: &str) -> Result<(f64, Option<ExactRational>), Failure> {
    let s = parse_scalar(text).map_err(|e| {
        let f = describe(&e, Some(text));
        Failure::usage(format!("--{name}: {}", f.message))
    })?;
    Ok((s.value, s.exact))
}

fn cubic_from_flags(args: &SolveArgs) -> Result<(String, GeneralCubic), Failure> {
    let given = [args.expr.is_some(), args.p.is_some() || args.q.is_some(), args.a.is_some() || args.b.is_some() || args.c.is_some() || args.lead.is_some()];
    if given.iter().filter(|g| **g).count() != 1 {
        return Err(Failure::usage("give exactly one of --expr, --p/--q, --a/--b/--c, or --batch"));
    }
    if let Some(expr) = &args.expr {
        let c = parse_cubic(expr).map_err(|e| describe(&e, Some(expr)))?;
        return Ok((expr.clone(), c));
    }
    let get = |v: &Option<String>, name: &str, default: &str| scalar(v.as_deref().unwrap_or(default), name);
    if args.p.is_some() || args.q.is_some() {
        let (p, ep) = get(&args.p, "p", "0")?;
        let (q, eq) = get(&args.q, "q", "0")?;
        let label = format!("x^3 + ({})x + ({})", args.p.as_deref().unwrap_or("0"), args.q.as_deref().unwrap_or("0"));
        let c = match (ep, eq) {
            (Some(ep), Some(eq)) => GeneralCubic::from_rationals(ExactRational::one(), ExactRational::zero(), ep, eq),
            _ => GeneralCubic::monic(0.0, p, q),
        };
        return c.map(|c| (label, c)).map_err(|e| describe(&e, None));
    }
    let (lead, el) = get(&args.lead, "lead", "1")?;
    let (a, ea) = get(&args.a, "a", "0")?;
    let (b, eb) = get(&args.b, "b", "0")?;
    let (c, ec) = get(&args.c, "c", "0")?;
    let label = format!(
        "({})x^3 + ({})x^2 + ({})x + ({})",
        args.lead.as_deref().unwrap_or("1"),
        args.a.as_deref().unwrap_or("0"),
        args.b.as_deref().unwrap_or("0"),
        args.c.as_deref().unwrap_or("0")
    );
    let cubic = match (el, ea, eb, ec) {
        (Some(el), Some(ea), Some(eb), Some(ec)) => GeneralCubic::from_rationals(el, ea, eb, ec),
        _ => GeneralCubic::new(lead, a, b, c),
    };
    cubic.map(|c| (label, c)).map_err(|e| describe(&e, None))
}

fn record_options(args: &SolveArgs) -> RecordOptions {
    let method = match args.method {
        MethodArg::Chen | MethodArg::Both => Method::Chen,
        MethodArg::Cardano => Method::Cardano,
        MethodArg::Moebius => Method::Moebius,
    };
    let branch = args.branch.map(|b| match b {
        BranchArg::Principal => CubeRootBranch::Principal,
        BranchArg::Real => CubeRootBranch::RealPreferring,
    });
    RecordOptions {
        solve: SolveOptions { method, branch, polish: args.polish },
        compare: matches!(args.method, MethodArg::Both),
        verify: args.verify,
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}

fn render(record: &OutputRecord, format: Format, precision: usize) -> String {
    match format {
        Format::Json => json_line(record) + "\n",
        Format::Text => render::text(record, precision),
        Format::Trig => render::trig(record, precision),
        Format::Exact => render::exact(record, precision),
    }
}

fn run_solve(args: &SolveArgs) -> Result<(), Failure> {
    let opts = record_options(args);
    if let Some(path) = &args.batch {
        return run_batch(path, args, &opts);
    }
    let (label, cubic) = cubic_from_flags(args)?;
    let record = OutputRecord::build(&label, &cubic, &opts).map_err(|e| describe(&e, None))?;
    print!("{}", render(&record, args.format, args.precision));
    if !record.passed_verification() {
        return Err(Failure { code: EXIT_NUMERIC, message: "verification failed".into() });
    }
    Ok(())
}

fn solve_line(line: &str, opts: &RecordOptions) -> Result<OutputRecord, Failure> {
    let cubic = parse_cubic(line).map_err(|e| describe(&e, Some(line)))?;
    OutputRecord::build(line, &cubic, opts).map_err(|e| describe(&e, None))
}

fn run_batch(path: &PathBuf, args: &SolveArgs, opts: &RecordOptions) -> Result<(), Failure> {
    if args.expr.is_some() || args.p.is_some() || args.q.is_some() || args.a.is_some() || args.b.is_some() || args.c.is_some() {
        return Err(Failure::usage("--batch cannot be combined with other inputs"));
    }
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();

    #[cfg(feature = "parallel")]
    let results: Vec<_> = lines.par_iter().map(|(_, l)| solve_line(l, opts)).collect();
    #[cfg(not(feature = "parallel"))]
    let results: Vec<_> = lines.iter().map(|(_, l)| solve_line(l, opts)).collect();

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut worst = 0u8;
    for ((lineno, _), result) in lines.iter().zip(results) {
        match result {
            Ok(record) => {
                let _ = writeln!(out, "{}", json_line(&record));
                if !record.passed_verification() {
                    worst = worst.max(EXIT_NUMERIC);
                }
            }
            Err(f) => {
                eprintln!("line {lineno}: {}", f.message);
                worst = worst.max(f.code);
            }
        }
    }
    if worst == 0 {
        Ok(())
    } else {
        Err(Failure { code: worst, message: "some inputs failed".into() })
    }
}

#[derive(Serialize)]
struct DenestRecord {
    a: String,
    b: String,
    p: f64,
    q: f64,
    value: f64,
    exact: Option<String>,
    note: Option<&'static str>,
}

fn run_denest(args: &DenestArgs) -> Result<(), Failure> {
    let (a, ea) = scalar(&args.a, "a")?;
    let (b, eb) = scalar(&args.b, "b")?;
    let radical = match (ea, eb) {
        (Some(ea), Some(eb)) => NestedRadical::from_rationals(ea, eb),
        _ => NestedRadical::new(a, b),
    }
    .map_err(|e| describe(&e, None))?;
    let result = denest(&radical).map_err(|e| describe(&e, None))?;
    if !result.value.is_finite() {
        return Err(Failure { code: EXIT_NUMERIC, message: "non-finite value".into() });
    }
    match args.format {
        Format::Json => {
            let rec = DenestRecord {
                a: args.a.clone(),
                b: args.b.clone(),
                p: result.cubic.p,
                q: result.cubic.q,
                value: result.value,
                exact: result.exact.as_ref().map(|e| e.to_string()),
                note: result.note(),
            };
            println!("{}", json_line(&rec));
        }
        _ => {
            let input = format!("cbrt({0} + sqrt({1})) + cbrt({0} - sqrt({1}))", args.a, args.b);
            print!("{}", render::denest_text(&input, &result, args.precision));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Solve(args) => run_solve(args),
        Command::Denest(args) => run_denest(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
