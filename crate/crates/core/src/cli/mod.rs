//! The `grothmn` command line: `expand`, `poly`, `tableaux` and `verify`.
//!
//! Exit status is 0 on success, 1 when a verification check fails (or an
//! output file cannot be written) and 2 on a usage error.

pub mod render;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::grothendieck::Construction;
use crate::mnrule::{expand_canonical, expand_classical, expand_proposition_row, expand_stable, vanishing_terms};
use crate::shapes::Partition;
use crate::tableaux::{Family, TableauIter};
use crate::verify::{self, CheckParams, Identity, Report, SweepConfig, Verifier};

use render::SCHEMA_VERSION;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Latex,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "grothmn", version, about = "Murnaghan-Nakayama rules for Grothendieck polynomials")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand p_k times a Schur or Grothendieck polynomial.
    Expand(ExpandArgs),
    /// Print a Schur or Grothendieck polynomial.
    Poly(PolyArgs),
    /// List or count tableaux of a shape.
    Tableaux(TableauxArgs),
    /// Check the expansion identities by exact polynomial arithmetic.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Classical,
    Stable,
    Canonical,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// Comma-separated parts, e.g. 3,2,1; "" is the empty partition.
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Stable)]
    pub mode: ModeArg,
    /// Expand the alternant with k added to row j instead (stable mode only).
    #[arg(long)]
    pub row: Option<usize>,
    /// Also list the candidate shapes whose coefficient vanishes.
    #[arg(long)]
    pub show_vanishing: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructionArg {
    Schur,
    Svt,
    Det,
    Hvt,
    Subst,
}

impl From<ConstructionArg> for Construction {
    fn from(c: ConstructionArg) -> Self {
        match c {
            ConstructionArg::Schur => Construction::Schur,
            ConstructionArg::Svt => Construction::Svt,
            ConstructionArg::Det => Construction::Det,
            ConstructionArg::Hvt => Construction::Hvt,
            ConstructionArg::Subst => Construction::Subst,
        }
    }
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub construction: ConstructionArg,
    /// Keep terms of x-degree at most this (required for hvt and subst).
    #[arg(long)]
    pub cap: Option<u32>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Ssyt,
    Svt,
    Hvt,
}

#[derive(Debug, Args)]
pub struct TableauxArgs {
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Maximum number of entries in total (required for hvt).
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long)]
    pub count_only: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Bound on lambda as ROWSxCOLS.
    #[arg(long, value_parser = parse_box, default_value = "3x3")]
    pub max_box: (usize, usize),
    #[arg(long, default_value_t = 5)]
    pub max_size: usize,
    #[arg(long, default_value_t = 4)]
    pub k_max: usize,
    #[arg(long, default_value_t = 3)]
    pub n_max: usize,
    #[arg(long, default_value_t = 4)]
    pub gamma_max: usize,
    #[arg(long, default_value_t = 3)]
    pub r_max: usize,
    #[arg(long, default_value_t = 3)]
    pub canonical_max_size: usize,
    #[arg(long, default_value_t = 3)]
    pub canonical_k_max: usize,
    #[arg(long, default_value_t = 2)]
    pub canonical_n_max: usize,
    /// Extra x-degree beyond |lambda| + k for the two-parameter checks.
    #[arg(long, default_value_t = 3)]
    pub cap_slack: u32,
    /// Restrict to these identities (repeatable).
    #[arg(long = "identity", value_parser = parse_identity)]
    pub identities: Vec<Identity>,
    /// Single instance: partition.
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Option<Partition>,
    /// Single instance: exponent vector for the lemma.
    #[arg(long, value_parser = parse_list)]
    pub gamma: Option<Exponents>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long)]
    pub cap: Option<u32>,
    /// Run the stable rule with a deliberately wrong sign and expect a failure.
    #[arg(long)]
    pub self_test: bool,
    /// Print every result, not only failures.
    #[arg(long)]
    pub verbose: bool,
}

/// A comma-separated exponent vector, in any order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exponents(pub Vec<usize>);

fn parse_list(s: &str) -> Result<Exponents, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Exponents(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("malformed entry {t:?}")))
        .collect::<Result<_, _>>()
        .map(Exponents)
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

fn parse_box(s: &str) -> Result<(usize, usize), String> {
    let (r, c) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected ROWSxCOLS, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("malformed box {s:?}"));
    Ok((num(r)?, num(c)?))
}

fn parse_identity(s: &str) -> Result<Identity, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit status.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let result = match &cli.output {
        Some(path) => File::create(path).map_err(CliError::from).and_then(|f| {
            let mut w = BufWriter::new(f);
            let code = run(&cli, &mut w)?;
            w.flush()?;
            Ok(code)
        }),
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            run(&cli, &mut w).and_then(|code| {
                w.flush()?;
                Ok(code)
            })
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_CHECK_FAILED)
        }
    }
}

/// Runs a parsed command, writing its output to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    match &cli.command {
        Command::Expand(a) => cmd_expand(a, cli.format, out),
        Command::Poly(a) => cmd_poly(a, cli.format, out),
        Command::Tableaux(a) => cmd_tableaux(a, cli.format, out),
        Command::Verify(a) => cmd_verify(a, cli.format, out),
    }
}

#[derive(Serialize)]
struct VanishingDoc {
    schema_version: u32,
    kind: &'static str,
    vanishing: Vec<Vec<usize>>,
}

pub fn cmd_expand(a: &ExpandArgs, format: OutputFormat, out: &mut dyn Write) -> Result<u8, CliError> {
    if a.n < 1 {
        return Err(usage("n must be at least 1"));
    }
    let e = match (a.mode, a.row) {
        (ModeArg::Stable, Some(j)) => expand_proposition_row(&a.lambda, a.k, a.n, j)?,
        (_, Some(_)) => return Err(usage("--row is only available in stable mode")),
        (ModeArg::Classical, None) => expand_classical(&a.lambda, a.k, a.n)?,
        (ModeArg::Stable, None) => expand_stable(&a.lambda, a.k, a.n)?,
        (ModeArg::Canonical, None) => expand_canonical(&a.lambda, a.k, a.n)?,
    };
    match format {
        OutputFormat::Json => writeln!(out, "{}", render::expansion_json(&e))?,
        OutputFormat::Latex => writeln!(out, "{}", render::expansion_latex(&e))?,
        OutputFormat::Text => writeln!(out, "{}", render::expansion_text(&e))?,
    }
    if a.show_vanishing {
        if a.row.is_some() || a.mode == ModeArg::Classical {
            return Err(usage("--show-vanishing applies to the stable and canonical rules"));
        }
        let zeros = vanishing_terms(&a.lambda, a.k, a.n)?;
        match format {
            OutputFormat::Json => {
                let doc = VanishingDoc {
                    schema_version: SCHEMA_VERSION,
                    kind: "vanishing",
                    vanishing: zeros.iter().map(|p| p.parts().to_vec()).collect(),
                };
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            }
            _ => {
                let list: Vec<String> = zeros.iter().map(ToString::to_string).collect();
                writeln!(out, "vanishing: {}", if list.is_empty() { "none".into() } else { list.join(" ") })?;
            }
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_poly(a: &PolyArgs, format: OutputFormat, out: &mut dyn Write) -> Result<u8, CliError> {
    let c: Construction = a.construction.into();
    if c.needs_cap() && a.cap.is_none() {
        return Err(usage("--cap is required for the hvt and subst constructions"));
    }
    if !c.needs_cap() && a.cap.is_some() {
        return Err(usage("--cap only applies to the hvt and subst constructions"));
    }
    let p = c.build(&a.lambda, a.n, a.cap)?;
    let s = match format {
        OutputFormat::Json => render::poly_json(&p),
        OutputFormat::Latex => render::poly_latex(&p),
        OutputFormat::Text => p.to_string(),
    };
    writeln!(out, "{s}")?;
    Ok(EXIT_OK)
}

pub fn cmd_tableaux(a: &TableauxArgs, format: OutputFormat, out: &mut dyn Write) -> Result<u8, CliError> {
    let family = match (a.family, a.cap) {
        (FamilyArg::Hvt, Some(cap)) => Family::Hvt { cap },
        (FamilyArg::Hvt, None) => return Err(usage("--cap is required for hook-valued tableaux")),
        (_, Some(_)) => return Err(usage("--cap only applies to hook-valued tableaux")),
        (FamilyArg::Ssyt, None) => Family::Ssyt,
        (FamilyArg::Svt, None) => Family::Svt,
    };
    let family_name = format!("{:?}", a.family).to_lowercase();
    let iter = TableauIter::new(&a.lambda, a.n, family);
    if a.count_only {
        let count = iter.count();
        match format {
            OutputFormat::Json => writeln!(
                out,
                "{{\"schema_version\":{SCHEMA_VERSION},\"kind\":\"tableau_count\",\"family\":\"{family_name}\",\"count\":{count}}}"
            )?,
            _ => writeln!(out, "{count}")?,
        }
        return Ok(EXIT_OK);
    }
    match format {
        OutputFormat::Latex => Err(usage("tableau listings are available as text or json")),
        OutputFormat::Text => {
            for t in iter {
                writeln!(out, "{t}")?;
            }
            Ok(EXIT_OK)
        }
        OutputFormat::Json => {
            write!(
                out,
                "{{\"schema_version\":{SCHEMA_VERSION},\"kind\":\"tableaux\",\"family\":\"{family_name}\",\"tableaux\":["
            )?;
            for (i, t) in iter.enumerate() {
                let sep = if i == 0 { "" } else { "," };
                write!(out, "{sep}\n  {}", serde_json::to_string(&t.to_string())?)?;
            }
            writeln!(out, "\n]}}")?;
            Ok(EXIT_OK)
        }
    }
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    schema_version: u32,
    kind: &'static str,
    #[serde(flatten)]
    report: &'a Report,
}

#[derive(Serialize)]
struct SelfTestDoc<'a> {
    schema_version: u32,
    kind: &'static str,
    #[serde(flatten)]
    result: &'a verify::SelfTest,
}

fn threads_from_env() -> Result<Option<usize>, CliError> {
    match std::env::var("GROTHMN_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t > 0 => Ok(Some(t)),
            _ => Err(usage(format!("GROTHMN_THREADS must be a positive integer, got {v:?}"))),
        },
        Err(_) => Ok(None),
    }
}

impl VerifyArgs {
    fn config(&self) -> Result<SweepConfig, CliError> {
        let mut cfg = SweepConfig {
            max_rows: self.max_box.0,
            max_cols: self.max_box.1,
            max_size: self.max_size,
            k_max: self.k_max,
            n_max: self.n_max,
            gamma_max: self.gamma_max,
            r_max: self.r_max,
            canonical_max_size: self.canonical_max_size,
            canonical_k_max: self.canonical_k_max,
            canonical_n_max: self.canonical_n_max,
            cap_slack: self.cap_slack,
            threads: threads_from_env()?,
            ..SweepConfig::default()
        };
        if !self.identities.is_empty() {
            cfg = cfg.only(self.identities.iter().copied());
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn single_instance(&self) -> bool {
        self.lambda.is_some() || self.gamma.is_some()
    }

    /// Builds the parameters for a single check, filling in the default cap.
    fn params(&self, id: Identity) -> Result<CheckParams, CliError> {
        let n = self.n.ok_or_else(|| usage("--n is required for a single check"))?;
        let size = self.lambda.as_ref().map_or(0, Partition::size);
        let cap = match id {
            Identity::Canonical => {
                let k = self.k.ok_or_else(|| usage("--k is required"))?;
                Some(self.cap.unwrap_or((size + k) as u32 + self.cap_slack))
            }
            Identity::Remark => Some(self.cap.unwrap_or(size as u32 + self.cap_slack)),
            _ => self.cap,
        };
        Ok(CheckParams {
            lambda: self.lambda.as_ref().map(|l| l.parts().to_vec()),
            gamma: self.gamma.as_ref().map(|g| g.0.clone()),
            k: self.k,
            r: self.r,
            n,
            j: self.j,
            cap,
        })
    }
}

fn write_report(report: &Report, verbose: bool, format: OutputFormat, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        OutputFormat::Json => {
            let doc = ReportDoc { schema_version: SCHEMA_VERSION, kind: "verify_report", report };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        _ => {
            for r in &report.results {
                if verbose || !r.passed {
                    writeln!(out, "{r}")?;
                }
            }
            let s = &report.summary;
            writeln!(out, "checked {} instances: {} passed, {} failed", s.total, s.passed, s.failed)?;
        }
    }
    Ok(())
}

pub fn cmd_verify(a: &VerifyArgs, format: OutputFormat, out: &mut dyn Write) -> Result<u8, CliError> {
    if format == OutputFormat::Latex {
        return Err(usage("verify reports are available as text or json"));
    }
    let cfg = a.config()?;
    if a.self_test {
        let st = verify::self_test(&cfg)?;
        match format {
            OutputFormat::Json => {
                let doc = SelfTestDoc { schema_version: SCHEMA_VERSION, kind: "self_test", result: &st };
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            }
            _ => {
                if let Some(f) = &st.first_failure {
                    writeln!(out, "{f}")?;
                    writeln!(
                        out,
                        "self-test: wrong coefficient formula detected after {} instances",
                        st.instances_checked
                    )?;
                } else {
                    writeln!(
                        out,
                        "self-test: wrong coefficient formula NOT detected in {} instances",
                        st.instances_checked
                    )?;
                }
            }
        }
        return Ok(if st.detected { EXIT_OK } else { EXIT_CHECK_FAILED });
    }
    let report = if a.single_instance() {
        let id = match a.identities.as_slice() {
            [id] => *id,
            _ => return Err(usage("a single check needs exactly one --identity")),
        };
        let result = Verifier::new().run(id, &a.params(id)?)?;
        Report::from_results(vec![result])
    } else {
        verify::sweep(&cfg)?
    };
    write_report(&report, a.verbose || a.single_instance(), format, out)?;
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_CHECK_FAILED })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String) {
        let cli = Cli::try_parse_from(std::iter::once("grothmn").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let code = match run(&cli, &mut buf) {
            Ok(c) => c,
            Err(CliError::Usage(_)) => EXIT_USAGE,
            Err(CliError::Io(_)) => EXIT_CHECK_FAILED,
        };
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn poly_examples() {
        assert_eq!(run_args(&["poly", "--lambda", "1", "--n", "2", "--construction", "svt"]).1, "x1 + x2 + b*x1*x2\n");
        assert_eq!(
            run_args(&["poly", "--lambda", "1", "--n", "1", "--construction", "hvt", "--cap", "3"]).1,
            "x1 + a*x1^2 + a^2*x1^3\n"
        );
        assert_eq!(run_args(&["poly", "--lambda", "", "--n", "2", "--construction", "det"]).1, "1\n");
        assert_eq!(run_args(&["poly", "--lambda", "1", "--n", "1", "--construction", "hvt"]).0, EXIT_USAGE);
    }

    #[test]
    fn tableaux_examples() {
        assert_eq!(run_args(&["tableaux", "--lambda", "2,1", "--n", "3", "--family", "ssyt", "--count-only"]).1, "8\n");
        assert_eq!(run_args(&["tableaux", "--lambda", "1", "--n", "2", "--family", "svt"]).1.lines().count(), 3);
        assert_eq!(
            run_args(&["tableaux", "--lambda", "1,1,1", "--n", "2", "--family", "ssyt", "--count-only"]).1,
            "0\n"
        );
    }

    #[test]
    fn expand_usage_errors() {
        assert_eq!(run_args(&["expand", "--lambda", "1", "--k", "0", "--n", "2"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["expand", "--lambda", "1", "--k", "1", "--n", "2", "--row", "3"]).0, EXIT_USAGE);
        assert_eq!(
            run_args(&["expand", "--lambda", "1", "--k", "1", "--n", "2", "--mode", "classical", "--row", "1"]).0,
            EXIT_USAGE
        );
        assert!(Cli::try_parse_from(["grothmn", "expand", "--lambda", "1,2", "--k", "1", "--n", "2"]).is_err());
    }

    #[test]
    fn verify_single_instances() {
        let (code, out) = run_args(&["verify", "--identity", "lemma", "--gamma", "1,0", "--r", "1", "--n", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("PASS lemma gamma=(1,0) r=1 n=2\n"), "{out}");
        let (code, _) = run_args(&["verify", "--lambda", "1", "--k", "1", "--n", "1"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, out) = run_args(&["verify", "--identity", "canonical", "--lambda", "1", "--k", "2", "--n", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("cap=6"), "{out}");
    }
}
