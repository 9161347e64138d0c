//! Command-line front end for `minknot`.
//!
//! Exit codes: 0 on success, 1 when exact and numeric data disagree,
//! 2 on invalid input.

pub mod report;
pub mod svg;

use std::fmt::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minknot::catalog::{load_catalog, Catalog};
use minknot::params::parse_rational;
use minknot::Rational;
use serde::Serialize;

use report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "minknot", version, about = "Braids and invariants of simple minimal knots K(N,p,q,phase)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Extra catalog entries (JSON), merged over the bundled table.
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct KnotArgs {
    /// Number of strands N.
    pub n: u32,
    pub p: u32,
    pub q: u32,
    /// Phase in turns as an exact fraction a/b; defaults to the canonical phase.
    #[arg(long, value_parser = parse_phase)]
    pub phase: Option<Rational>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Braid word, closure permutation, writhe and crossing table.
    Braid {
        #[command(flatten)]
        knot: KnotArgs,
        /// Write the braid diagram to this SVG file.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Alexander and Jones polynomials, diagnostics and identification.
    Invariants {
        #[command(flatten)]
        knot: KnotArgs,
    },
    /// One row per valid p (and q), with a periodicity check.
    Scan {
        n: u32,
        /// Fixed q; otherwise give --q.
        q: Option<u32>,
        /// Inclusive range A..B of p; defaults to one period N+1..N+2qN.
        #[arg(long = "p", value_parser = parse_range)]
        p_range: Option<(u32, u32)>,
        /// Inclusive range A..B of q.
        #[arg(long = "q", value_parser = parse_range)]
        q_range: Option<(u32, u32)>,
    },
    /// Critical phases, as exact fractions of a turn.
    Phases { n: u32, p: u32, q: u32 },
    /// Certify the exact schedule and signs against the sampled curve.
    Verify {
        #[command(flatten)]
        knot: KnotArgs,
    },
}

fn parse_phase(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("'{s}' is not a range A..B"))?;
    let num = |x: &str| x.trim().parse::<u32>().map_err(|_| format!("'{x}' is not a non-negative integer"));
    let (a, b) = (num(a)?, num(b)?);
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<minknot::Error> for CliError {
    fn from(e: minknot::Error) -> Self {
        let code = if is_verification_error(&e) { EXIT_MISMATCH } else { EXIT_INVALID };
        CliError { code, message: e.to_string() }
    }
}

fn invalid(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_INVALID, message: message.into() }
}

/// What to print and how to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| invalid(e.to_string()))
}

fn catalog(cli: &Cli) -> Result<Catalog, CliError> {
    Ok(load_catalog(cli.catalog.as_deref())?)
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let ok = |output| Ok(Outcome { output, code: EXIT_OK });
    match &cli.command {
        Command::Braid { knot, svg } => {
            let params = params_from(knot.n, knot.p, knot.q, knot.phase)?;
            let r = braid_report(&params)?;
            if let Some(path) = svg {
                std::fs::write(path, svg::render(&params, &r.crossings))
                    .map_err(|e| invalid(format!("cannot write {}: {e}", path.display())))?;
            }
            ok(match cli.format {
                Format::Json => json(&r)?,
                Format::Text => braid_text(&r),
                Format::Csv => braid_csv(&r),
            })
        }
        Command::Invariants { knot } => {
            let params = params_from(knot.n, knot.p, knot.q, knot.phase)?;
            let r = invariants_report(&params, &catalog(cli)?)?;
            ok(match cli.format {
                Format::Json => json(&r)?,
                Format::Text => invariants_text(&r),
                Format::Csv => invariants_csv(&r),
            })
        }
        Command::Scan { n, q, p_range, q_range } => {
            let qs: Vec<u32> = match (q, q_range) {
                (Some(q), None) => vec![*q],
                (None, Some((a, b))) => (*a..=*b).collect(),
                (Some(_), Some(_)) => return Err(invalid("give either a positional q or --q, not both")),
                (None, None) => return Err(invalid("scan needs q or --q A..B")),
            };
            let r = scan_report(*n, &qs, *p_range, &catalog(cli)?)?;
            ok(match cli.format {
                Format::Json => json(&r)?,
                Format::Text => scan_text(&r),
                Format::Csv => scan_csv(&r),
            })
        }
        Command::Phases { n, p, q } => {
            let r = phases_report(*n, *p, *q)?;
            ok(match cli.format {
                Format::Json => json(&r)?,
                Format::Text => phases_text(&r),
                Format::Csv => {
                    std::iter::once("phase".to_string()).chain(r.set.phases.iter().map(|x| x.to_string())).join_lines()
                }
            })
        }
        Command::Verify { knot } => {
            let params = params_from(knot.n, knot.p, knot.q, knot.phase)?;
            let r = verify_report(&params)?;
            let output = match cli.format {
                Format::Json => json(&r)?,
                Format::Text => verify_text(&r),
                Format::Csv => verify_csv(&r),
            };
            Ok(Outcome { output, code: if r.clean { EXIT_OK } else { EXIT_MISMATCH } })
        }
    }
}

trait JoinLines {
    fn join_lines(self) -> String;
}

impl<I: Iterator<Item = String>> JoinLines for I {
    fn join_lines(self) -> String {
        let mut s = String::new();
        for line in self {
            s.push_str(&line);
            s.push('\n');
        }
        s
    }
}

fn list<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn braid_text(r: &BraidReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", r.params);
    let _ = writeln!(s, "word:     [{}]", list(&r.word));
    let _ = writeln!(s, "writhe:   {}", r.writhe);
    let _ = writeln!(
        s,
        "closure:  [{}], {} component{}",
        list(&r.closure.permutation),
        r.closure.components,
        if r.closure.components == 1 { "" } else { "s" }
    );
    let _ = writeln!(s, "{:>4}  {:>10}  {:>2} {:>2}  {:>4}  {:>5}  sign", "#", "t", "k", "l", "m", "level");
    for c in &r.crossings {
        let sign = c.sign.map(|x| x.to_string()).unwrap_or_default();
        let _ = writeln!(s, "{:>4}  {:>10}  {:>2} {:>2}  {:>4}  {:>5}  {sign}", c.ordinal, c.time.to_string(), c.k, c.l, c.m, c.level);
    }
    s
}

fn braid_csv(r: &BraidReport) -> String {
    std::iter::once("ordinal,time,k,l,m,level,sign".to_string())
        .chain(r.crossings.iter().map(|c| {
            let sign = c.sign.map(|x| x.to_i32()).unwrap_or(0);
            format!("{},{},{},{},{},{},{sign}", c.ordinal, c.time, c.k, c.l, c.m, c.level)
        }))
        .join_lines()
}

fn invariants_text(r: &InvariantsReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", r.params);
    let _ = writeln!(s, "writhe:            {}", r.writhe);
    let _ = writeln!(s, "alexander:         {}", r.alexander);
    let _ = writeln!(s, "rolfsen:           {}", r.rolfsen);
    let _ = writeln!(s, "determinant:       {}", r.determinant);
    let _ = writeln!(s, "arf (diagnostic):  {}", r.arf_diagnostic);
    let _ = writeln!(s, "square mod 2:      {}", r.square_mod2);
    let _ = writeln!(s, "monic (fibered?):  {}", r.fibered_necessary);
    let _ = writeln!(s, "symmetry:          {}", r.symmetry);
    match &r.jones {
        Some(v) => {
            let _ = writeln!(s, "jones:             {v}");
        }
        None => {
            let _ = writeln!(s, "jones:             (too many strands)");
        }
    }
    if r.identification.candidates.is_empty() {
        let _ = writeln!(s, "candidates:        none in catalog");
    } else {
        let labels: Vec<String> = r.identification.candidates.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(s, "candidates:        {}", labels.join(", "));
    }
    if let Some(note) = &r.identification.obstruction_note {
        let _ = writeln!(s, "note:              {note}");
    }
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn invariants_csv(r: &InvariantsReport) -> String {
    let best = r.identification.best().map(|c| c.label.clone()).unwrap_or_default();
    let row = [
        r.params.strands.to_string(),
        r.params.p.to_string(),
        r.params.q.to_string(),
        r.params.phase.to_string(),
        r.writhe.to_string(),
        r.rolfsen.to_string(),
        r.determinant.to_string(),
        r.fibered_necessary.to_string(),
        r.symmetry.to_string(),
        r.jones.as_ref().map(|v| v.to_string()).unwrap_or_default(),
        best,
    ];
    let row: Vec<String> = row.iter().map(|s| csv_field(s)).collect();
    format!("N,p,q,phase,writhe,rolfsen,determinant,monic,symmetry,jones,candidate\n{}\n", row.join(","))
}

fn scan_text(r: &ScanReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:>4} {:>4}  {:>8}  {:>6}  {:<28}  class", "p", "q", "phase", "writhe", "rolfsen");
    for row in &r.rows {
        let w = row.writhe.map(|w| w.to_string()).unwrap_or_else(|| "-".into());
        let a = row.rolfsen.as_ref().map(|a| a.to_string()).unwrap_or_else(|| "-".into());
        let class = row.error.as_ref().map(|e| format!("error: {e}")).unwrap_or_else(|| row.class.clone());
        let _ = writeln!(s, "{:>4} {:>4}  {:>8}  {:>6}  {:<28}  {class}", row.p, row.q, row.phase.to_string(), w, a);
    }
    let _ = writeln!(s, "\n{} classes:", r.classes.len());
    for c in &r.classes {
        let _ = writeln!(s, "  {:<32} first at p={}, q={} ({} rows)", c.class, c.first.0, c.first.1, c.count);
    }
    let pr = &r.periodicity;
    let _ = writeln!(s, "\nperiodicity p -> p+2qN: {}/{} rows agree", pr.agreeing, pr.checked);
    for (p, q) in &pr.mismatches {
        let _ = writeln!(s, "  mismatch at p={p}, q={q}");
    }
    s
}

fn scan_csv(r: &ScanReport) -> String {
    std::iter::once("p,q,phase,writhe,rolfsen,class,symmetry,error".to_string())
        .chain(r.rows.iter().map(|row| {
            let fields = [
                row.p.to_string(),
                row.q.to_string(),
                row.phase.to_string(),
                row.writhe.map(|w| w.to_string()).unwrap_or_default(),
                row.rolfsen.as_ref().map(|a| a.to_string()).unwrap_or_default(),
                row.class.clone(),
                row.symmetry.to_string(),
                row.error.clone().unwrap_or_default(),
            ];
            fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",")
        }))
        .join_lines()
}

fn phases_text(r: &PhasesReport) -> String {
    format!(
        "critical phases of K({},{},{}) ({}):\n  {}\ncanonical phase: {}\n",
        r.set.strands,
        r.set.p,
        r.set.q,
        r.set.len(),
        list(&r.set.phases),
        r.canonical
    )
}

fn verify_text(r: &VerifyReport) -> String {
    let c = &r.crossings;
    let mut s = String::new();
    let _ = writeln!(s, "{}", r.params);
    let _ = writeln!(s, "matched:            {}", c.matched);
    let _ = writeln!(s, "missing:            {}", c.missing.len());
    let _ = writeln!(s, "extra:              {}", c.extra.len());
    let _ = writeln!(s, "max time error:     {:.3e} (tolerance {:.0e})", c.max_time_error, c.match_tolerance);
    let _ = writeln!(s, "sign disagreements: {}", c.sign_disagreements.len());
    let _ = writeln!(s, "closed vs direct:   {}", r.closed_vs_direct.len());
    let _ = writeln!(s, "min separation:     {:.6e}", r.min_separation);
    let _ = writeln!(s, "status:             {}", if r.clean { "ok" } else { "MISMATCH" });
    s
}

fn verify_csv(r: &VerifyReport) -> String {
    let c = &r.crossings;
    format!(
        "N,p,q,phase,matched,missing,extra,max_time_error,sign_disagreements,closed_vs_direct,min_separation,clean\n\
         {},{},{},{},{},{},{},{:e},{},{},{:e},{}\n",
        r.params.strands,
        r.params.p,
        r.params.q,
        r.params.phase,
        c.matched,
        c.missing.len(),
        c.extra.len(),
        c.max_time_error,
        c.sign_disagreements.len(),
        r.closed_vs_direct.len(),
        r.min_separation,
        r.clean
    )
}
