//! Command-line front end: dump symbols, run the functionals, emit tables,
//! evaluate single integrals and run the acceptance checks.
//!
//! Exit status: `0` on success, `1` when a verdict fails (a functional that
//! should vanish does not, or a verification criterion fails), `2` on an
//! invalid configuration.

mod forms;

pub use forms::parse_form;

use crate::algebra::print::symbol_to_string;
use crate::algebra::NcSymbol;
use crate::arith::{parse_rat, Rat};
use crate::functionals::{
    einstein_functional, metric_coefficients, metric_functional, render_text, spectral_closedness, symbolic_forms, torsion_functional,
    torsion_generic, FunctionalError, FunctionalReport, Options, SCHEMA_VERSION,
};
use crate::psido::{dirac_squared, dirac_symbol, inverse_dirac, inverse_dirac_squared, DiracVariant, OneForm};
use crate::residue::{assemble_f, pi_value_text, tables_latex, tables_markdown, IntegralKey, Normalization, Table};
use crate::verify::{VerifyConfig, Verifier};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

/// Environment variable naming the default output directory.
pub const OUTPUT_DIR_ENV: &str = "NCTORUS_OUTPUT_DIR";

/// Output format of a command.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Markdown,
    Latex,
}

impl OutputFormat {
    fn extension(self) -> &'static str {
        match self {
            OutputFormat::Text => "txt",
            OutputFormat::Json => "json",
            OutputFormat::Markdown => "md",
            OutputFormat::Latex => "tex",
        }
    }
}

/// Residue normalization flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NormalizationArg {
    /// `N = 1`, the convention of the published tables.
    Table,
    /// `N = 4`, the full angular integral.
    Raw,
}

impl From<NormalizationArg> for Normalization {
    fn from(n: NormalizationArg) -> Self {
        match n {
            NormalizationArg::Table => Normalization::Table,
            NormalizationArg::Raw => Normalization::Raw,
        }
    }
}

/// Exact symbolic engine for the asymmetric noncommutative torus.
#[derive(Debug, Parser)]
#[command(name = "nctorus", version, about)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Normalization of the residue integrals.
    #[arg(long, value_enum, default_value = "table", global = true)]
    pub normalization: NormalizationArg,
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: OutputFormat,
    /// Write the output to this file instead of standard output. Without it,
    /// output goes to `$NCTORUS_OUTPUT_DIR/<command>.<ext>` when that variable
    /// is set.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Lowest order kept in the parametrix of D_k (3 keeps b_-1 to b_-3).
    #[arg(long, default_value_t = 3, global = true)]
    pub b_depth: u32,
    /// Lowest order kept in the parametrix of D_k^2 (4 keeps c_-2 to c_-4).
    #[arg(long, default_value_t = 4, global = true)]
    pub c_depth: u32,
    /// Collapse all words to commuting normal form before reduction.
    #[arg(long, global = true)]
    pub commutative: bool,
    /// Sample points s for the quadrature oracle, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "1/2,1,2,3", global = true)]
    pub oracle_samples: Vec<String>,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print rho(D_k), rho(D_k^2) and the parametrix terms b_j and c_j.
    Symbols,
    /// Metric functional Wres(u v D_k^-2).
    Metric {
        /// Two one-forms (see `--help` of `closedness`); default: symbolic u, v.
        #[arg(long, value_delimiter = ',')]
        forms: Vec<String>,
    },
    /// Torsion functional; without forms, the generic a sigma1 + b k sigma2.
    Torsion {
        /// Three one-forms.
        #[arg(long, value_delimiter = ',')]
        forms: Vec<String>,
    },
    /// Spectral closedness Wres(T D_k |D_k|^-2) for products T of one-forms.
    Closedness {
        /// One-forms: a name such as `u` (symbolic u_1 sigma1 + u_2 k sigma2),
        /// `sigma1`, `ksigma2`, or `free:a:b` (a sigma1 + b k sigma2).
        #[arg(long, value_delimiter = ',')]
        forms: Vec<String>,
        /// Product lengths to check with symbolic forms (default 1 to 4).
        #[arg(long, value_delimiter = ',')]
        lengths: Vec<usize>,
    },
    /// Einstein functional Wres(u {D_k, v} D_k D_k^-2) with all group sums.
    Einstein,
    /// Regenerate the six first-derivative-pair tables.
    Tables,
    /// Evaluate F(s; m, n, beta, a, b).
    Integral {
        m: u32,
        n: u32,
        beta: u32,
        /// Power of `k` in the first block.
        #[arg(default_value_t = 0, allow_negative_numbers = true)]
        a: i64,
        /// Power of `k` in the second block.
        #[arg(default_value_t = 0, allow_negative_numbers = true)]
        b: i64,
    },
    /// Run every acceptance check.
    Verify {
        /// Iterations of each randomized property check.
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        /// Seed of the randomized checks.
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Symbols => "symbols",
            Command::Metric { .. } => "metric",
            Command::Torsion { .. } => "torsion",
            Command::Closedness { .. } => "closedness",
            Command::Einstein => "einstein",
            Command::Tables => "tables",
            Command::Integral { .. } => "integral",
            Command::Verify { .. } => "verify",
        }
    }
}

/// Why a run could not produce its artifact.
#[derive(Debug)]
pub enum Failure {
    /// Invalid configuration (exit status 2).
    Config(String),
}

impl From<FunctionalError> for Failure {
    fn from(e: FunctionalError) -> Self {
        Failure::Config(e.to_string())
    }
}

/// The rendered artifact and whether every verdict in it holds.
pub struct Artifact {
    pub body: String,
    pub ok: bool,
    pub summary: String,
}

fn unsupported(cmd: &str, f: OutputFormat) -> Failure {
    Failure::Config(format!("format {f:?} is not available for `{cmd}`").to_lowercase())
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

fn options(cfg: &RunConfig) -> Options {
    Options {
        normalization: cfg.normalization.into(),
        dirac_depth: cfg.b_depth,
        laplace_depth: cfg.c_depth,
        commutative: cfg.commutative,
        variant: DiracVariant::Standard,
        deletion: None,
    }
}

fn parse_forms(specs: &[String], want: Option<usize>, default: impl FnOnce() -> Vec<OneForm>) -> Result<Vec<OneForm>, Failure> {
    if specs.is_empty() {
        return Ok(default());
    }
    let forms = specs.iter().map(|s| parse_form(s).map_err(Failure::Config)).collect::<Result<Vec<_>, _>>()?;
    if let Some(n) = want {
        if forms.len() != n {
            return Err(Failure::Config(format!("expected {n} one-forms, got {}", forms.len())));
        }
    }
    Ok(forms)
}

fn report_markdown(r: &FunctionalReport) -> String {
    let mut out = format!("## {} functional\n\n{}\n\n", r.functional.name(), r.convention);
    for (i, input) in r.inputs.iter().enumerate() {
        out.push_str(&format!("- input {}: {}\n", i + 1, input));
    }
    out.push_str("\n| Word | Slots | Terms | Sum | Verdict |\n|---|---|---:|---|---|\n");
    for g in &r.groups {
        out.push_str(&format!(
            "| `{}` | {} | {} | {} | {} |\n",
            crate::residue::word_label(&g.uv_word),
            g.slots,
            g.terms,
            pi_value_text(&g.sum, g.k_power),
            if g.zero { "zero" } else { "NONZERO" }
        ));
    }
    out.push_str(&format!("\n**Overall:** {}\n", if r.overall_zero { "zero" } else { "NONZERO" }));
    if !r.tables.is_empty() {
        out.push('\n');
        out.push_str(&tables_markdown(&r.tables));
    }
    out
}

fn render_report(cmd: &str, r: &FunctionalReport, f: OutputFormat, extra_text: &str) -> Result<String, Failure> {
    Ok(match f {
        OutputFormat::Text => format!("{}{extra_text}", render_text(r)),
        OutputFormat::Json => to_json(r),
        OutputFormat::Markdown => report_markdown(r),
        OutputFormat::Latex if !r.tables.is_empty() => tables_latex(&r.tables),
        OutputFormat::Latex => return Err(unsupported(cmd, f)),
    })
}

fn verdict_artifact(body: String, ok: bool, what: &str) -> Artifact {
    let summary = format!("{what}: {}", if ok { "zero" } else { "NONZERO" });
    Artifact { body, ok, summary }
}

fn symbols(cfg: &RunConfig) -> Result<Artifact, Failure> {
    let cerr = |e: crate::psido::PsidoError| Failure::Config(e.to_string());
    if cfg.b_depth < 1 || cfg.c_depth < 2 {
        return Err(Failure::Config("parametrix depths must be at least 1 (b) and 2 (c)".into()));
    }
    let b = inverse_dirac(DiracVariant::Standard, cfg.b_depth).map_err(cerr)?;
    let c = inverse_dirac_squared(DiracVariant::Standard, cfg.c_depth - 1).map_err(cerr)?;
    let mut list: Vec<(String, NcSymbol)> = vec![("rho(D_k)".into(), dirac_symbol()), ("rho(D_k^2)".into(), dirac_squared(DiracVariant::Standard).map_err(cerr)?)];
    for j in 1..=cfg.b_depth as i64 {
        list.push((format!("b_-{j}"), b.part(-j)));
    }
    for j in 2..=cfg.c_depth as i64 {
        list.push((format!("c_-{j}"), c.part(-j)));
    }
    let body = match cfg.format {
        OutputFormat::Text => list.iter().map(|(n, s)| format!("{n} ({} terms):\n{}\n", s.len(), symbol_to_string(s))).collect::<Vec<_>>().join("\n"),
        OutputFormat::Json => to_json(&json!({
            "schema_version": SCHEMA_VERSION,
            "symbols": list.iter().map(|(n, s)| json!({
                "name": n,
                "terms": symbol_to_string(s).lines().collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })),
        OutputFormat::Markdown => list
            .iter()
            .map(|(n, s)| format!("### {n}\n\n```\n{}\n```\n", symbol_to_string(s)))
            .collect::<Vec<_>>()
            .join("\n"),
        OutputFormat::Latex => list
            .iter()
            .map(|(n, s)| {
                let lines: Vec<String> = symbol_to_string(s).lines().map(|l| format!("  &{l}")).collect();
                format!("% {n}\n\\begin{{align*}}\n{}\n\\end{{align*}}\n", lines.join(" \\\\\n"))
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(Artifact { body, ok: true, summary: format!("{} symbols", list.len()) })
}

fn tables(cfg: &RunConfig) -> Result<Artifact, Failure> {
    let r = einstein_functional(&OneForm::symbolic("u"), &OneForm::symbolic("v"), &options(cfg))?;
    let ok = r.tables.iter().all(|t| t.zero);
    let body = match cfg.format {
        OutputFormat::Text | OutputFormat::Markdown => tables_markdown(&r.tables),
        OutputFormat::Latex => tables_latex(&r.tables),
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                schema_version: u32,
                normalization: Normalization,
                tables: &'a [Table],
            }
            to_json(&Out { schema_version: SCHEMA_VERSION, normalization: r.normalization, tables: &r.tables })
        }
    };
    Ok(verdict_artifact(body, ok, "table sums"))
}

fn integral(cfg: &RunConfig, key: IntegralKey) -> Result<Artifact, Failure> {
    let norm: Normalization = cfg.normalization.into();
    let (k_power, value) = assemble_f(&key, norm).map_err(|e| Failure::Config(e.to_string()))?;
    let text = format!("k^{k_power}, {}", if value.is_zero() { "0".to_string() } else { format!("pi * {}", value.to_expr()) });
    let body = match cfg.format {
        OutputFormat::Text | OutputFormat::Markdown => format!("{text}\n"),
        OutputFormat::Latex => format!("{}\n", crate::residue::pi_value_latex(&value, k_power)),
        OutputFormat::Json => to_json(&json!({
            "schema_version": SCHEMA_VERSION,
            "key": key,
            "normalization": norm,
            "k_power": k_power,
            "value_over_pi": value,
        })),
    };
    Ok(Artifact { body, ok: true, summary: text })
}

fn verify(cfg: &RunConfig, cases: usize, seed: u64) -> Result<Artifact, Failure> {
    let samples = cfg
        .oracle_samples
        .iter()
        .map(|s| parse_rat(s).map_err(|e| Failure::Config(e.to_string())))
        .collect::<Result<Vec<Rat>, _>>()?;
    if samples.is_empty() || samples.iter().any(|s| *s <= Rat::from_integer(0.into())) {
        return Err(Failure::Config("oracle samples must be positive rationals".into()));
    }
    if cfg.b_depth < 3 || cfg.c_depth < 2 {
        return Err(Failure::Config("verification needs --b-depth >= 3 and --c-depth >= 2".into()));
    }
    let vc = VerifyConfig { oracle_samples: samples, dirac_depth: cfg.b_depth, laplace_depth: cfg.c_depth, property_cases: cases, seed };
    let report = Verifier::new(vc).run_all();
    let body = match cfg.format {
        OutputFormat::Text | OutputFormat::Markdown => report.render_text(),
        OutputFormat::Json => to_json(&report),
        OutputFormat::Latex => return Err(unsupported("verify", cfg.format)),
    };
    let failed: Vec<String> = report.criteria.iter().filter(|c| !c.passed).map(|c| c.id.to_string()).collect();
    let summary = if failed.is_empty() { "all criteria passed".to_string() } else { format!("failed criteria: {}", failed.join(", ")) };
    Ok(Artifact { body, ok: report.all_passed, summary })
}

/// Executes a parsed configuration and returns the artifact.
pub fn execute(cfg: &RunConfig) -> Result<Artifact, Failure> {
    let opts = options(cfg);
    let name = cfg.command.name();
    match &cfg.command {
        Command::Symbols => symbols(cfg),
        Command::Metric { forms } => {
            let f = parse_forms(forms, Some(2), || vec![OneForm::symbolic("u"), OneForm::symbolic("v")])?;
            let r = metric_functional(&f[0], &f[1], &opts)?;
            let map = metric_coefficients(&r);
            let extra: String = map.iter().map(|(w, (p, v))| format!("metric: {w} -> {}\n", pi_value_text(v, *p))).collect();
            let body = render_report(name, &r, cfg.format, &extra)?;
            Ok(Artifact { body, ok: true, summary: format!("metric: {} nonzero coefficients", map.len()) })
        }
        Command::Torsion { forms } => {
            let r = if forms.is_empty() {
                torsion_generic(&opts)?
            } else {
                let f = parse_forms(forms, Some(3), Vec::new)?;
                torsion_functional(&f[0], &f[1], &f[2], &opts)?
            };
            Ok(verdict_artifact(render_report(name, &r, cfg.format, "")?, r.overall_zero, "torsion"))
        }
        Command::Closedness { forms, lengths } => {
            let runs: Vec<Vec<OneForm>> = if !forms.is_empty() {
                vec![parse_forms(forms, None, Vec::new)?]
            } else {
                let ls = if lengths.is_empty() { vec![1, 2, 3, 4] } else { lengths.clone() };
                if ls.contains(&0) {
                    return Err(Failure::Config("product lengths must be at least 1".into()));
                }
                ls.into_iter().map(symbolic_forms).collect()
            };
            let reports = runs.iter().map(|f| spectral_closedness(f, &opts)).collect::<Result<Vec<_>, _>>()?;
            let ok = reports.iter().all(|r| r.overall_zero);
            let body = match cfg.format {
                OutputFormat::Json => to_json(&reports),
                f => reports.iter().map(|r| render_report(name, r, f, "")).collect::<Result<Vec<_>, _>>()?.join("\n"),
            };
            Ok(verdict_artifact(body, ok, "closedness"))
        }
        Command::Einstein => {
            let r = einstein_functional(&OneForm::symbolic("u"), &OneForm::symbolic("v"), &opts)?;
            let ok = r.overall_zero && crate::functionals::tensoriality_check(&r);
            Ok(verdict_artifact(render_report(name, &r, cfg.format, "")?, ok, "einstein"))
        }
        Command::Tables => tables(cfg),
        Command::Integral { m, n, beta, a, b } => integral(cfg, IntegralKey::new(*m, *n, *beta, *a, *b)),
        Command::Verify { cases, seed } => verify(cfg, *cases, *seed),
    }
}

fn output_path(cfg: &RunConfig) -> Option<PathBuf> {
    if let Some(p) = &cfg.output {
        return Some(p.clone());
    }
    let dir = std::env::var_os(OUTPUT_DIR_ENV).filter(|d| !d.is_empty())?;
    Some(PathBuf::from(dir).join(format!("{}.{}", cfg.command.name(), cfg.format.extension())))
}

/// Parses arguments, runs, writes the artifact and maps the outcome to an
/// exit status.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let artifact = match execute(&cfg) {
        Ok(a) => a,
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match output_path(&cfg) {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                if let Err(e) = std::fs::create_dir_all(parent) {
                    eprintln!("error: cannot create {}: {e}", parent.display());
                    return ExitCode::from(2);
                }
            }
            if let Err(e) = std::fs::write(&path, &artifact.body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
            eprintln!("wrote {}", path.display());
        }
        None => print!("{}", artifact.body),
    }
    if artifact.ok {
        ExitCode::SUCCESS
    } else {
        eprintln!("verdict failed: {}", artifact.summary);
        ExitCode::from(1)
    }
}
