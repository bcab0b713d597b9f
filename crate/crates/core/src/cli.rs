//! The `topocheck` command line: argument parsing, job configuration and
//! rendering. `run` is pure apart from the worker pool it builds, so tests
//! drive it directly.

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::axioms::{self, Axiom, Disjointness, MeeklyOptions, Operands};
use crate::classes::{classification_table, ClassificationTable, SetClass};
use crate::explorer::{
    self, audit_claims, check_implication, run_theorem_suite, search_minimal_counterexample, AuditReport,
    AuditTarget, CounterexampleReport, ExplorerError, ImplicationSpec, Outcome, TheoremOutcome,
};
use crate::mask::SubsetMask;
use crate::space::{SpaceContext, SpaceFile, SpaceFileError, Topology};

/// Environment variable that caps the largest point count any job may use.
pub const MAX_N_ENV: &str = "TOPOCHECK_MAX_N";

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Membership table of every subset of a space.
    Classify,
    /// Separation-axiom verdicts for a space.
    Axioms,
    /// Check an implication (or the built-in theorem list) exhaustively.
    Verify,
    /// List every topology on n points.
    Enumerate,
    /// Find the smallest space where the hypotheses hold and the conclusion fails.
    Search,
    /// Compare recorded claims with computed values.
    Audit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Markdown,
    Csv,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Space(#[from] SpaceFileError),
    #[error(transparent)]
    Explorer(#[from] ExplorerError),
    #[error("point count {n} exceeds the {MAX_N_ENV} cap of {cap}")]
    Capped { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobConfig {
    pub command: Command,
    pub input_path: Option<PathBuf>,
    pub n_range: Option<RangeInclusive<usize>>,
    pub options: MeeklyOptions,
    pub output_format: OutputFormat,
    /// Worker threads; 0 lets the pool pick.
    pub parallelism: usize,
    pub hypotheses: Vec<Axiom>,
    pub conclusion: Option<Axiom>,
    /// Columns for `classify`; empty means the seven standard columns.
    pub classes: Vec<SetClass>,
    pub up_to_homeomorphism: bool,
    /// Targets for `audit`; empty means all.
    pub targets: Vec<AuditTarget>,
    /// Hard cap on point counts, normally from `TOPOCHECK_MAX_N`.
    pub max_n: Option<usize>,
}

impl JobConfig {
    pub fn new(command: Command) -> Self {
        JobConfig {
            command,
            input_path: None,
            n_range: None,
            options: MeeklyOptions::default(),
            output_format: OutputFormat::default(),
            parallelism: 0,
            hypotheses: Vec::new(),
            conclusion: None,
            classes: Vec::new(),
            up_to_homeomorphism: false,
            targets: Vec::new(),
            max_n: None,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let usage = |m: &str| Err(CliError::Usage(m.to_string()));
        match self.command {
            Command::Classify | Command::Axioms if self.input_path.is_none() => {
                return usage("this command needs --input");
            }
            Command::Verify | Command::Enumerate | Command::Search if self.n_range.is_none() => {
                return usage("this command needs --n");
            }
            Command::Search if self.conclusion.is_none() => return usage("search needs --conclusion"),
            Command::Verify if self.conclusion.is_none() && !self.hypotheses.is_empty() => {
                return usage("--hypothesis given without --conclusion");
            }
            _ => {}
        }
        if let Some(r) = &self.n_range {
            if r.is_empty() {
                return Err(ExplorerError::EmptyRange {
                    start: *r.start(),
                    end: *r.end(),
                }
                .into());
            }
            explorer::enumerate::check_range(*r.start())?;
            explorer::enumerate::check_range(*r.end())?;
            if let Some(cap) = self.max_n {
                if *r.end() > cap {
                    return Err(CliError::Capped { n: *r.end(), cap });
                }
            }
        }
        Ok(())
    }
}

/// Parses `A..B`, `A..=B` or a single `A`.
pub fn parse_n_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad point count {t:?} in {s:?}"));
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            Ok(n..=n)
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "topocheck", version, about = "Decide set classes and separation axioms on finite topological spaces")]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Space file (JSON: {"points": [...], "opens": [[...], ...]}), or an array of them.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Markdown)]
    format: OutputFormat,
    /// Point-count range, `A..B` or a single value.
    #[arg(long = "n", value_parser = parse_n_range)]
    n: Option<RangeInclusive<usize>>,
    /// Hypothesis axiom; repeat for a conjunction.
    #[arg(long = "hypothesis", value_parser = Axiom::from_str)]
    hypotheses: Vec<Axiom>,
    #[arg(long, value_parser = Axiom::from_str)]
    conclusion: Option<Axiom>,
    #[arg(long = "meekly-disjointness", value_parser = Disjointness::from_str, default_value = "open")]
    disjointness: Disjointness,
    #[arg(long = "meekly-operands", value_parser = Operands::from_str, default_value = "both-closed")]
    operands: Operands,
    /// Only one space per homeomorphism class.
    #[arg(long = "up-to-homeo")]
    up_to_homeo: bool,
    /// Worker threads (0 = automatic).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Comma-separated class names for `classify`.
    #[arg(long, value_delimiter = ',', value_parser = SetClass::from_str)]
    classes: Vec<SetClass>,
    /// Audit target; repeatable.
    #[arg(long = "target", value_parser = AuditTarget::from_str)]
    targets: Vec<AuditTarget>,
}

/// Builds a job from command-line arguments (without the program name
/// stripped; the first item is ignored as clap expects).
pub fn parse_args<I, T>(args: I, max_n: Option<usize>) -> Result<JobConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let a = Args::try_parse_from(args)?;
    Ok(JobConfig {
        command: a.command,
        input_path: a.input,
        n_range: a.n,
        options: MeeklyOptions {
            disjointness: a.disjointness,
            operands: a.operands,
        },
        output_format: a.format,
        parallelism: a.jobs,
        hypotheses: a.hypotheses,
        conclusion: a.conclusion,
        classes: a.classes,
        up_to_homeomorphism: a.up_to_homeo,
        targets: a.targets,
        max_n,
    })
}

/// Reads `TOPOCHECK_MAX_N`; unset or unparsable means no cap.
pub fn max_n_from_env() -> Option<usize> {
    std::env::var(MAX_N_ENV).ok().and_then(|v| v.trim().parse().ok())
}

/// Runs a job. `space_file_contents` is the content of `input_path` for
/// commands that read a space and is ignored otherwise. Returns the exit
/// code and the rendered output (or the error message on exit code 2).
pub fn run(config: &JobConfig, space_file_contents: &[u8]) -> (i32, String) {
    match try_run(config, space_file_contents) {
        Ok(r) => r,
        Err(e) => (EXIT_INPUT, format!("error: {e}\n")),
    }
}

fn try_run(config: &JobConfig, input: &[u8]) -> Result<(i32, String), CliError> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    pool.install(|| match config.command {
        Command::Classify => classify(config, &read_spaces(input, config.max_n)?),
        Command::Axioms => axioms_cmd(config, &read_spaces(input, config.max_n)?),
        Command::Verify => verify(config),
        Command::Search => search(config),
        Command::Enumerate => enumerate(config),
        Command::Audit => Ok((EXIT_OK, audit(config))),
    })
}

/// One space file or a JSON array of them.
fn read_spaces(input: &[u8], max_n: Option<usize>) -> Result<Vec<Topology>, CliError> {
    let text = std::str::from_utf8(input).map_err(|_| CliError::Usage("input is not UTF-8".into()))?;
    let value: Value = serde_json::from_str(text).map_err(SpaceFileError::from)?;
    let files: Vec<SpaceFile> = if value.is_array() {
        serde_json::from_value(value).map_err(SpaceFileError::from)?
    } else {
        vec![serde_json::from_value(value).map_err(SpaceFileError::from)?]
    };
    if files.is_empty() {
        return Err(CliError::Usage("input holds no spaces".into()));
    }
    files
        .into_iter()
        .map(|f| {
            if let Some(cap) = max_n {
                if f.points.len() > cap {
                    return Err(CliError::Capped { n: f.points.len(), cap });
                }
            }
            Ok(f.into_topology()?)
        })
        .collect()
}

fn set_label(t: &Topology, a: SubsetMask) -> String {
    if a.is_empty() {
        "∅".into()
    } else if a.is_full() {
        "X".into()
    } else {
        a.display_with(t.point_names()).to_string()
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        ""
    }
}

fn csv_string(rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(&r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

fn markdown_table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = format!("| {} |\n", header.join(" | "));
    out.push_str(&format!("|{}\n", "---|".repeat(header.len())));
    for r in rows {
        let cells: Vec<String> = r.iter().map(|c| c.replace('|', "\\|")).collect();
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
    out
}

fn space_heading(i: usize, t: &Topology) -> String {
    let opens: Vec<String> = sorted_opens(t).iter().map(|&o| set_label(t, o)).collect();
    format!("## Space {}: {{{}}}\n\n", i + 1, opens.join(", "))
}

fn sorted_opens(t: &Topology) -> Vec<SubsetMask> {
    let mut v: Vec<SubsetMask> = t.opens().collect();
    v.sort_by_key(|m| m.table_key());
    v
}

fn classify(config: &JobConfig, spaces: &[Topology]) -> Result<(i32, String), CliError> {
    let classes = if config.classes.is_empty() {
        SetClass::TABLE_COLUMNS.to_vec()
    } else {
        config.classes.clone()
    };
    let tables: Vec<(&Topology, ClassificationTable)> = spaces
        .iter()
        .map(|t| (t, classification_table(&SpaceContext::new(t.clone()), &classes)))
        .collect();
    let multi = spaces.len() > 1;
    let out = match config.output_format {
        OutputFormat::Markdown => {
            let mut header = vec!["Subset".to_string()];
            header.extend(classes.iter().map(|c| c.name().to_string()));
            let mut out = String::new();
            for (i, (t, table)) in tables.iter().enumerate() {
                if multi {
                    out.push_str(&space_heading(i, t));
                }
                let rows: Vec<Vec<String>> = table
                    .rows
                    .iter()
                    .map(|r| {
                        let mut row = vec![set_label(t, r.subset)];
                        row.extend(r.cells.iter().map(|&b| mark(b).to_string()));
                        row
                    })
                    .collect();
                out.push_str(&markdown_table(&header, &rows));
                if multi && i + 1 < tables.len() {
                    out.push('\n');
                }
            }
            out
        }
        OutputFormat::Csv => {
            let mut header = Vec::new();
            if multi {
                header.push("space".to_string());
            }
            header.push("subset".to_string());
            header.extend(classes.iter().map(|c| c.name().to_string()));
            let mut rows = vec![header];
            for (i, (t, table)) in tables.iter().enumerate() {
                for r in &table.rows {
                    let mut row = Vec::new();
                    if multi {
                        row.push((i + 1).to_string());
                    }
                    row.push(set_label(t, r.subset));
                    row.extend(r.cells.iter().map(|b| b.to_string()));
                    rows.push(row);
                }
            }
            csv_string(rows)
        }
        OutputFormat::Json => {
            let docs: Vec<Value> = tables
                .iter()
                .map(|(t, table)| {
                    let rows: Vec<Value> = table
                        .rows
                        .iter()
                        .map(|r| {
                            let cells: serde_json::Map<String, Value> = classes
                                .iter()
                                .zip(&r.cells)
                                .map(|(c, &b)| (c.name().to_string(), Value::Bool(b)))
                                .collect();
                            json!({
                                "subset": set_label(t, r.subset),
                                "members": r.subset.points().map(|p| t.point_names()[p].clone()).collect::<Vec<_>>(),
                                "cells": cells,
                            })
                        })
                        .collect();
                    json!({"space": SpaceFile::from_topology(t), "classes": classes, "rows": rows})
                })
                .collect();
            let doc = if multi { Value::from(docs) } else { docs.into_iter().next().expect("one space") };
            pretty(&doc)
        }
    };
    Ok((EXIT_OK, out))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json renders");
    s.push('\n');
    s
}

fn verdict_detail(ctx: &SpaceContext, v: &axioms::AxiomVerdict) -> String {
    let mut parts = Vec::new();
    if let Some(r) = &v.refutation {
        parts.push(axioms::describe_refutation(ctx, r));
    }
    if let Some(h) = v.hausdorff {
        parts.push(format!("hausdorff: {}", if h { "yes" } else { "no" }));
    }
    parts.extend(v.notes.iter().map(|n| n.to_string()));
    parts.join("; ")
}

fn axioms_cmd(config: &JobConfig, spaces: &[Topology]) -> Result<(i32, String), CliError> {
    let multi = spaces.len() > 1;
    let reports: Vec<(SpaceContext, Vec<axioms::AxiomVerdict>)> = spaces
        .iter()
        .map(|t| {
            let ctx = SpaceContext::new(t.clone());
            let report = axioms::axiom_report(&ctx, config.options);
            (ctx, report)
        })
        .collect();
    let out = match config.output_format {
        OutputFormat::Markdown => {
            let header = vec!["Axiom".to_string(), "Holds".to_string(), "Detail".to_string()];
            let mut out = format!("Meekly options: {}\n\n", config.options.label());
            for (i, (ctx, report)) in reports.iter().enumerate() {
                if multi {
                    out.push_str(&space_heading(i, ctx.topology()));
                }
                let rows: Vec<Vec<String>> = report
                    .iter()
                    .map(|v| vec![v.axiom.name().to_string(), mark(v.holds).to_string(), verdict_detail(ctx, v)])
                    .collect();
                out.push_str(&markdown_table(&header, &rows));
                if multi && i + 1 < reports.len() {
                    out.push('\n');
                }
            }
            out
        }
        OutputFormat::Csv => {
            let mut header = Vec::new();
            if multi {
                header.push("space".to_string());
            }
            header.extend(["axiom", "holds", "detail"].map(String::from));
            let mut rows = vec![header];
            for (i, (ctx, report)) in reports.iter().enumerate() {
                for v in report {
                    let mut row = Vec::new();
                    if multi {
                        row.push((i + 1).to_string());
                    }
                    row.extend([v.axiom.name().to_string(), v.holds.to_string(), verdict_detail(ctx, v)]);
                    rows.push(row);
                }
            }
            csv_string(rows)
        }
        OutputFormat::Json => {
            let docs: Vec<Value> = reports
                .iter()
                .map(|(ctx, report)| {
                    json!({
                        "space": SpaceFile::from_topology(ctx.topology()),
                        "options": config.options,
                        "verdicts": report.iter().map(|v| axioms::verdict_json(ctx, v)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = if multi { Value::from(docs) } else { docs.into_iter().next().expect("one space") };
            pretty(&doc)
        }
    };
    Ok((EXIT_OK, out))
}

fn spec_of(config: &JobConfig) -> ImplicationSpec {
    ImplicationSpec::new(
        &config.hypotheses,
        config.conclusion.expect("validated"),
        config.n_range.clone().expect("validated"),
    )
    .with_options(config.options)
    .up_to_homeomorphism(config.up_to_homeomorphism)
}

fn report_line(r: &CounterexampleReport, verified: &str, found: &str) -> String {
    match &r.outcome {
        Outcome::VerifiedExhaustively => format!("{verified} over {} spaces\n", r.checked_count),
        Outcome::Counterexample { topology, refutation } => {
            let ctx = SpaceContext::new(topology.clone());
            let mut s = format!(
                "{found} after checking {} spaces: {}\n",
                r.checked_count,
                crate::space::space_to_json(topology)
            );
            if let Some(rf) = refutation {
                s.push_str(&format!("  {} fails at {}\n", r.spec.conclusion, axioms::describe_refutation(&ctx, rf)));
            }
            s
        }
    }
}

fn report_csv_row(name: &str, r: &CounterexampleReport) -> Vec<String> {
    let (outcome, space) = match &r.outcome {
        Outcome::VerifiedExhaustively => ("verified-exhaustively".to_string(), String::new()),
        Outcome::Counterexample { topology, .. } => ("counterexample".to_string(), crate::space::space_to_json(topology)),
    };
    vec![
        name.to_string(),
        r.spec.hypotheses.iter().map(|a| a.name()).collect::<Vec<_>>().join("&"),
        r.spec.conclusion.name().to_string(),
        r.spec.options.disjointness.name().to_string(),
        r.spec.options.operands.name().to_string(),
        format!("{}..{}", r.spec.n_range.start(), r.spec.n_range.end()),
        r.checked_count.to_string(),
        r.premise_count.to_string(),
        outcome,
        space,
    ]
}

const REPORT_CSV_HEADER: [&str; 10] = [
    "name",
    "hypotheses",
    "conclusion",
    "disjointness",
    "operands",
    "n_range",
    "checked_count",
    "premise_count",
    "outcome",
    "counterexample",
];

fn render_reports(config: &JobConfig, named: &[(String, Value, CounterexampleReport)], verified: &str, found: &str) -> String {
    match config.output_format {
        OutputFormat::Markdown => named
            .iter()
            .map(|(name, _, r)| {
                let prefix = if name.is_empty() {
                    String::new()
                } else {
                    format!("{name} [{}]: ", r.spec.options.label())
                };
                format!("{prefix}{}", report_line(r, verified, found))
            })
            .collect(),
        OutputFormat::Csv => {
            let mut rows = vec![REPORT_CSV_HEADER.map(String::from).to_vec()];
            rows.extend(named.iter().map(|(name, _, r)| report_csv_row(name, r)));
            csv_string(rows)
        }
        OutputFormat::Json => {
            let docs: Vec<&Value> = named.iter().map(|(_, v, _)| v).collect();
            if docs.len() == 1 && named[0].0.is_empty() {
                pretty(docs[0])
            } else {
                pretty(&json!(docs))
            }
        }
    }
}

fn verify(config: &JobConfig) -> Result<(i32, String), CliError> {
    let named: Vec<(String, Value, CounterexampleReport)> = if config.conclusion.is_some() {
        let r = check_implication(&spec_of(config))?;
        vec![(String::new(), r.to_json(), r)]
    } else {
        let suite: Vec<TheoremOutcome> = run_theorem_suite(config.n_range.clone().expect("validated"))?;
        suite
            .into_iter()
            .map(|o| (o.theorem.to_string(), o.to_json(), o.report))
            .collect()
    };
    let code = if named.iter().all(|(_, _, r)| r.is_verified()) {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    };
    Ok((code, render_reports(config, &named, "verified", "counterexample found")))
}

fn search(config: &JobConfig) -> Result<(i32, String), CliError> {
    let r = search_minimal_counterexample(&spec_of(config))?;
    let named = vec![(String::new(), r.to_json(), r)];
    Ok((EXIT_OK, render_reports(config, &named, "no separating space", "minimal separating space")))
}

fn enumerate(config: &JobConfig) -> Result<(i32, String), CliError> {
    let mut spaces = Vec::new();
    for n in config.n_range.clone().expect("validated") {
        spaces.extend(explorer::enumerate_topologies(n, config.up_to_homeomorphism)?);
    }
    let out = match config.output_format {
        OutputFormat::Markdown => {
            let mut out = format!("{} topologies\n\n", spaces.len());
            for t in &spaces {
                let opens: Vec<String> = sorted_opens(t).iter().map(|&o| set_label(t, o)).collect();
                out.push_str(&format!("- n={}: {{{}}}\n", t.n(), opens.join(", ")));
            }
            out
        }
        OutputFormat::Csv => {
            let mut rows = vec![vec!["n".to_string(), "opens".to_string()]];
            rows.extend(spaces.iter().map(|t| {
                let opens: Vec<String> = sorted_opens(t).iter().map(|&o| set_label(t, o)).collect();
                vec![t.n().to_string(), opens.join(";")]
            }));
            csv_string(rows)
        }
        OutputFormat::Json => {
            let files: Vec<SpaceFile> = spaces.iter().map(SpaceFile::from_topology).collect();
            pretty(&serde_json::to_value(files).expect("spaces serialize"))
        }
    };
    Ok((EXIT_OK, out))
}

fn audit(config: &JobConfig) -> String {
    let targets = if config.targets.is_empty() {
        AuditTarget::ALL.to_vec()
    } else {
        config.targets.clone()
    };
    let reports: Vec<AuditReport> = audit_claims(&targets);
    match config.output_format {
        OutputFormat::Markdown => {
            let header = ["Location", "Claimed", "Computed", "Agree"].map(String::from);
            let mut out = String::new();
            for r in &reports {
                out.push_str(&format!("## {} ({}/{} agree)\n\n", r.target, r.agreed(), r.cells.len()));
                let rows: Vec<Vec<String>> = r
                    .cells
                    .iter()
                    .map(|c| {
                        vec![
                            c.location.clone(),
                            mark(c.claimed_value).to_string(),
                            mark(c.oracle_value).to_string(),
                            if c.agree { "yes" } else { "NO" }.to_string(),
                        ]
                    })
                    .collect();
                out.push_str(&markdown_table(&header, &rows));
                if !r.findings.is_empty() {
                    out.push_str("\nFindings:\n");
                    for f in &r.findings {
                        out.push_str(&format!("- {}: {}\n", f.kind, f.detail));
                    }
                }
                out.push('\n');
            }
            out
        }
        OutputFormat::Csv => {
            let mut rows = vec!["target,location,claimed,computed,agree,citation"
                .split(',')
                .map(String::from)
                .collect::<Vec<_>>()];
            for r in &reports {
                for c in &r.cells {
                    rows.push(vec![
                        r.target.to_string(),
                        c.location.clone(),
                        c.claimed_value.to_string(),
                        c.oracle_value.to_string(),
                        c.agree.to_string(),
                        c.citation.clone(),
                    ]);
                }
            }
            csv_string(rows)
        }
        OutputFormat::Json => pretty(&serde_json::to_value(&reports).expect("reports serialize")),
    }
}

/// Entry point behind the binary: parses `args`, reads the input file and
/// runs the job.
pub fn main_with_args<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match parse_args(args, max_n_from_env()) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    let bytes = match &config.input_path {
        Some(p) => match std::fs::read(p) {
            Ok(b) => b,
            Err(source) => {
                let e = CliError::Io {
                    path: p.display().to_string(),
                    source,
                };
                return (EXIT_INPUT, format!("error: {e}\n"));
            }
        },
        None => Vec::new(),
    };
    run(&config, &bytes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_range_forms() {
        assert_eq!(parse_n_range("1..4"), Ok(1..=4));
        assert_eq!(parse_n_range("2..=3"), Ok(2..=3));
        assert_eq!(parse_n_range("3"), Ok(3..=3));
        assert!(parse_n_range("a..3").is_err());
    }

    #[test]
    fn parse_flags() {
        let c = parse_args(
            [
                "topocheck",
                "verify",
                "--n",
                "1..3",
                "--hypothesis",
                "t1",
                "--hypothesis",
                "meekly-sc-star-normal",
                "--conclusion",
                "softly-regular",
                "--meekly-disjointness",
                "closure",
                "--meekly-operands",
                "relaxed",
                "--jobs",
                "2",
            ],
            Some(5),
        )
        .unwrap();
        assert_eq!(c.command, Command::Verify);
        assert_eq!(c.hypotheses, vec![Axiom::T1, Axiom::MeeklySCStarNormal]);
        assert_eq!(c.options.disjointness, Disjointness::ClosureDisjoint);
        assert_eq!(c.options.operands, Operands::SCStarSideNeedNotBeClosed);
        assert_eq!(c.parallelism, 2);
        assert_eq!(c.max_n, Some(5));
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert!(parse_args(["topocheck", "verify", "--conclusion", "nonsense"], None).is_err());
        assert!(parse_args(["topocheck", "classify", "--classes", "closed,bogus"], None).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let mut c = JobConfig::new(Command::Enumerate);
        c.n_range = Some(1..=4);
        c.max_n = Some(3);
        let (code, out) = run(&c, b"");
        assert_eq!(code, EXIT_INPUT);
        assert!(out.contains(MAX_N_ENV));
    }

    #[test]
    fn missing_requirements() {
        assert_eq!(run(&JobConfig::new(Command::Classify), b"").0, EXIT_INPUT);
        assert_eq!(run(&JobConfig::new(Command::Verify), b"").0, EXIT_INPUT);
    }
}
