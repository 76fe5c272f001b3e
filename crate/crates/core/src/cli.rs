//! The `alcove-lab` command line.
//!
//! Exit codes: `0` success, `1` a negative verdict (`compare` found
//! `Adm(μ) ⊊ Perm(μ)`, `steinberg` found violations), `2` invalid input,
//! `3` a guard was exceeded, `4` internal error.

use std::collections::BTreeSet;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::adm_perm;
use crate::bruhat;
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::iwahori_weyl::IWElement;
use crate::json;
use crate::oracle;
use crate::rational::fmt_vec;
use crate::root_data::GroupCtx;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "alcove-lab", version, about = "Admissible and permissible sets of Iwahori-Weyl groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate Adm(μ).
    Adm(SetArgs),
    /// Enumerate Perm(μ).
    Perm(SetArgs),
    /// Compare Adm(μ) with Perm(μ).
    Compare(CompareArgs),
    /// Lift a permissible element of type D to its translation part.
    Lift(LiftArgs),
    /// Check that the type B Bruhat order agrees with type D on embedded images.
    Steinberg(SteinbergArgs),
    /// Scan dominant cocharacters for Perm(μ) ≠ Adm(μ).
    SearchGap(GapArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct SetArgs {
    /// Group, e.g. D:3.
    #[arg(long)]
    pub ctx: String,
    /// Cocharacter as comma-separated integers.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Use the brute-force reference implementations.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[arg(long)]
    pub ctx: String,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Args, Debug)]
pub struct LiftArgs {
    #[arg(long)]
    pub ctx: String,
    /// Element as JSON, e.g. {"ctx":"D:3","t":[1,0,0],"s":[-1,2,-3]}.
    #[arg(long)]
    pub element: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SteinbergArgs {
    /// Rank of the type B group.
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub maxlen: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct GapArgs {
    #[arg(long)]
    pub ctx: String,
    /// Largest entry of the scanned dominant cocharacters.
    #[arg(long, default_value_t = 2)]
    pub max_entry: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GuardExceeded { .. } => EXIT_GUARD,
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_INVALID,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let guards = Guards::from_env();
    match dispatch(&cli.command, &guards, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: &Command, guards: &Guards, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Adm(a) => cmd_set(a, SetKind::Adm, guards, out),
        Command::Perm(a) => cmd_set(a, SetKind::Perm, guards, out),
        Command::Compare(a) => cmd_compare(a, guards, out),
        Command::Lift(a) => cmd_lift(a, out),
        Command::Steinberg(a) => cmd_steinberg(a, guards, out),
        Command::SearchGap(a) => cmd_search_gap(a, guards, out),
    }
}

pub fn parse_mu(ctx: &GroupCtx, s: &str) -> Result<Vec<i64>> {
    let mu = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("μ entry `{}` in `{s}`", p.trim())))
        })
        .collect::<Result<Vec<i64>>>()?;
    ctx.check_len(mu.len())?;
    Ok(mu)
}

fn io(e: std::io::Error) -> Error {
    Error::Internal(format!("write failed: {e}"))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SetKind {
    Adm,
    Perm,
}

impl SetKind {
    fn name(self) -> &'static str {
        match self {
            SetKind::Adm => "adm",
            SetKind::Perm => "perm",
        }
    }
}

fn compute(ctx: &GroupCtx, mu: &[i64], kind: SetKind, use_oracle: bool, guards: &Guards) -> Result<BTreeSet<IWElement>> {
    match (kind, use_oracle) {
        (SetKind::Adm, false) => adm_perm::admissible_set(ctx, mu, guards),
        (SetKind::Adm, true) => oracle::admissible_bruteforce(ctx, mu, guards),
        (SetKind::Perm, false) => adm_perm::permissible_set(ctx, mu),
        (SetKind::Perm, true) => oracle::permissible_bruteforce(ctx, mu, guards),
    }
}

fn cmd_set(a: &SetArgs, kind: SetKind, guards: &Guards, out: &mut dyn Write) -> Result<i32> {
    let ctx: GroupCtx = a.ctx.parse()?;
    let mu = parse_mu(&ctx, &a.mu)?;
    let set = compute(&ctx, &mu, kind, a.oracle, guards)?;
    let sorted = bruhat::canonical_sort(&ctx, set.iter().cloned());
    match a.format {
        Format::Json => {
            let doc = json::SetDoc::new(&ctx, &mu, kind.name(), &sorted);
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(|e| Error::Internal(e.to_string()))?;
            writeln!(out).map_err(io)?;
        }
        Format::Text => {
            writeln!(out, "# {} ctx={} mu={} count={}", kind.name(), ctx, fmt_vec(&mu), sorted.len()).map_err(io)?;
            for w in &sorted {
                writeln!(out, "{}\t{}", bruhat::length(&ctx, w)?, w).map_err(io)?;
            }
        }
        Format::Csv => {
            // the other set fills its column when it fits under the guards
            let other_kind = match kind {
                SetKind::Adm => SetKind::Perm,
                SetKind::Perm => SetKind::Adm,
            };
            let other = match compute(&ctx, &mu, other_kind, a.oracle, guards) {
                Ok(s) => Some(s),
                Err(Error::GuardExceeded { .. }) => None,
                Err(e) => return Err(e),
            };
            let (adm, perm) = match kind {
                SetKind::Adm => (Some(&set), other.as_ref()),
                SetKind::Perm => (other.as_ref(), Some(&set)),
            };
            write_csv(&ctx, &sorted, adm, perm, out)?;
        }
    }
    Ok(EXIT_OK)
}

fn write_csv(
    ctx: &GroupCtx,
    rows: &[IWElement],
    adm: Option<&BTreeSet<IWElement>>,
    perm: Option<&BTreeSet<IWElement>>,
    out: &mut dyn Write,
) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| Error::Internal(format!("csv: {e}"));
    wtr.write_record(["ctx", "translation", "window", "length", "in_adm", "in_perm"])
        .map_err(csv_err)?;
    let member = |s: Option<&BTreeSet<IWElement>>, w: &IWElement| s.map_or(String::new(), |s| s.contains(w).to_string());
    for w in rows {
        wtr.write_record([
            ctx.to_string(),
            fmt_vec(w.translation()),
            w.linear().to_string(),
            bruhat::length(ctx, w)?.to_string(),
            member(adm, w),
            member(perm, w),
        ])
        .map_err(csv_err)?;
    }
    wtr.flush().map_err(io)
}

fn cmd_compare(a: &CompareArgs, guards: &Guards, out: &mut dyn Write) -> Result<i32> {
    let ctx: GroupCtx = a.ctx.parse()?;
    let mu = parse_mu(&ctx, &a.mu)?;
    let cmp = if a.oracle {
        let adm = oracle::admissible_bruteforce(&ctx, &mu, guards)?;
        let perm = oracle::permissible_bruteforce(&ctx, &mu, guards)?;
        adm_perm::Comparison {
            witnesses: bruhat::canonical_sort(&ctx, perm.difference(&adm).cloned()),
            violations: bruhat::canonical_sort(&ctx, adm.difference(&perm).cloned()),
            adm,
            perm,
        }
    } else {
        adm_perm::compare(&ctx, &mu, guards)?
    };
    if !cmp.adm_subset() {
        return Err(Error::Internal(format!(
            "Adm(μ) ⊄ Perm(μ) for {ctx}, μ = {}: {} admissible elements are not permissible",
            fmt_vec(&mu),
            cmp.violations.len()
        )));
    }
    match a.format {
        Format::Json => {
            let doc = json::CompareDoc::new(&ctx, &mu, &cmp);
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(|e| Error::Internal(e.to_string()))?;
            writeln!(out).map_err(io)?;
        }
        Format::Text => {
            writeln!(out, "ctx={} mu={}", ctx, fmt_vec(&mu)).map_err(io)?;
            writeln!(out, "|Adm| = {}", cmp.adm.len()).map_err(io)?;
            writeln!(out, "|Perm| = {}", cmp.perm.len()).map_err(io)?;
            let verdict = if cmp.equal() { "Adm = Perm" } else { "Adm ⊊ Perm" };
            writeln!(out, "{verdict}").map_err(io)?;
            for w in &cmp.witnesses {
                writeln!(out, "witness\t{}\t{}", bruhat::length(&ctx, w)?, w).map_err(io)?;
            }
        }
        Format::Csv => {
            let all = bruhat::canonical_sort(&ctx, cmp.perm.iter().cloned());
            write_csv(&ctx, &all, Some(&cmp.adm), Some(&cmp.perm), out)?;
        }
    }
    Ok(if cmp.equal() { EXIT_OK } else { EXIT_VERDICT })
}

fn cmd_lift(a: &LiftArgs, out: &mut dyn Write) -> Result<i32> {
    let ctx: GroupCtx = a.ctx.parse()?;
    let (ectx, w) = json::parse_element(&a.element)?;
    if ectx != ctx {
        return Err(Error::Parse(format!("element context {ectx} differs from --ctx {ctx}")));
    }
    let steps = adm_perm::lift_chain(&ctx, &w)?;
    match a.format {
        Format::Json => {
            let doc = json::LiftDoc::new(&ctx, &w, &steps)?;
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(|e| Error::Internal(e.to_string()))?;
            writeln!(out).map_err(io)?;
        }
        Format::Text | Format::Csv => {
            writeln!(out, "# lift ctx={} steps={}", ctx, steps.len()).map_err(io)?;
            writeln!(out, "0\t-\t{}\t{}", bruhat::length(&ctx, &w)?, w).map_err(io)?;
            for (k, s) in steps.iter().enumerate() {
                writeln!(out, "{}\t{}\t{}\t{}", k + 1, s.root, bruhat::length(&ctx, &s.after)?, s.after).map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_steinberg(a: &SteinbergArgs, guards: &Guards, out: &mut dyn Write) -> Result<i32> {
    let report = adm_perm::check_bruhat_inheritance(a.n, a.maxlen, guards)?;
    match a.format {
        Format::Json => {
            let doc = json::InheritanceDoc::new(a.n, a.maxlen, &report)?;
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(|e| Error::Internal(e.to_string()))?;
            writeln!(out).map_err(io)?;
        }
        Format::Text | Format::Csv => {
            writeln!(
                out,
                "n={} maxlen={} elements={} pairs={} violations={}",
                a.n,
                a.maxlen,
                report.elements,
                report.pairs,
                report.violations.len()
            )
            .map_err(io)?;
            for (x, y) in &report.violations {
                writeln!(out, "violation\t{x}\t{y}").map_err(io)?;
            }
        }
    }
    Ok(if report.violations.is_empty() { EXIT_OK } else { EXIT_VERDICT })
}

fn cmd_search_gap(a: &GapArgs, guards: &Guards, out: &mut dyn Write) -> Result<i32> {
    let ctx: GroupCtx = a.ctx.parse()?;
    if a.max_entry < 0 {
        return Err(Error::Parse(format!("--max-entry must be nonnegative, got {}", a.max_entry)));
    }
    let mut scanned = Vec::new();
    let mut skipped = Vec::new();
    for mu in oracle::dominant_scan(&ctx, a.max_entry) {
        let len = bruhat::length(&ctx, &IWElement::translation_by(mu.clone()))?;
        if len > guards.ball_max_len {
            skipped.push((mu, len));
        } else {
            scanned.push(mu);
        }
    }
    let reports = adm_perm::search_gap(&ctx, &scanned, guards)?;
    match a.format {
        Format::Json => {
            let doc = json::GapDoc::new(&ctx, &scanned, &reports);
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(|e| Error::Internal(e.to_string()))?;
            writeln!(out).map_err(io)?;
        }
        Format::Text | Format::Csv => {
            writeln!(out, "ctx={} scanned={} gaps={}", ctx, scanned.len(), reports.len()).map_err(io)?;
            for r in &reports {
                writeln!(
                    out,
                    "mu={} |Adm|={} |Perm|={} witnesses={}",
                    fmt_vec(&r.mu),
                    r.adm_size,
                    r.perm_size,
                    r.witnesses.len()
                )
                .map_err(io)?;
                for w in &r.witnesses {
                    writeln!(out, "  {}\t{}", bruhat::length(&ctx, w)?, w).map_err(io)?;
                }
            }
        }
    }
    for (mu, len) in &skipped {
        writeln!(
            out,
            "skipped mu={} (length {len} > guard {}; raise with {})",
            fmt_vec(mu),
            guards.ball_max_len,
            crate::guard::GUARD_ENV
        )
        .map_err(io)?;
    }
    Ok(EXIT_OK)
}
