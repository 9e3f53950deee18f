//! `swapdist`: swap-distance optimality reports for word-order frequency data.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::thread;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use swapdist_core::io::{
    ensemble_json, ensemble_table, hasse_dot, ingest_csv, permutohedron_dot, report_json,
    report_table, Group, IngestConfig, RenderOptions, ReportRow,
};
use swapdist_core::permutohedron::DEFAULT_N_CAP;
use swapdist_core::stats::{run_ensemble, TrialRecord};
use swapdist_core::structure::{hasse, HasseMode};
use swapdist_core::{analyze, Alphabet, AnalyzeOptions, Error, Permutohedron};

#[derive(Parser)]
#[command(
    name = "swapdist",
    version,
    about = "Swap-distance optimality of order frequencies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-group report: F, m, S̄, chance of optimality, ⟨d⟩ family, Ω and structure flags.
    Analyze(AnalyzeArgs),
    /// Ensemble tests over all (or filtered) groups.
    Ensemble(EnsembleArgs),
    /// Graphviz export.
    #[command(subcommand)]
    Export(ExportCommand),
}

#[derive(Subcommand)]
enum ExportCommand {
    /// The permutohedron as an undirected graph.
    Permutohedron(PermutohedronArgs),
    /// The probability order of one group as a Hasse diagram.
    Hasse(HasseArgs),
}

#[derive(Args)]
struct SpaceArgs {
    /// Sequence length; must match the alphabet when both are given.
    #[arg(long)]
    n: Option<usize>,
    /// Constituent symbols, one character each (default SOV for n = 3, A, B, C, ... otherwise).
    #[arg(long)]
    alphabet: Option<String>,
}

#[derive(Args)]
struct DataArgs {
    /// CSV with group-key columns, then `order`, then `count`.
    input: PathBuf,
    #[command(flatten)]
    space: SpaceArgs,
    /// Comma-separated key columns to group by; counts of other keys are pooled.
    #[arg(long, value_delimiter = ',')]
    group_by: Option<Vec<String>>,
    #[command(flatten)]
    render: RenderArgs,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Decimals for fixed columns; significant digits for probabilities.
    #[arg(long, default_value_t = 2)]
    precision: u32,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SolverArgs {
    /// Limit on placements visited by exhaustive search.
    #[arg(long, default_value_t = AnalyzeOptions::default().enum_cap)]
    enum_cap: u64,
    /// Cross-check the n = 3 closed form against exhaustive search.
    #[arg(long, value_enum, default_value_t = Toggle::On)]
    verify_bruteforce: Toggle,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Args)]
struct EnsembleArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    solver: SolverArgs,
    /// Keep only groups with KEY=VALUE; repeat to combine.
    #[arg(long, value_name = "KEY=VALUE")]
    filter: Vec<String>,
}

#[derive(Args)]
struct PermutohedronArgs {
    #[command(flatten)]
    space: SpaceArgs,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct HasseArgs {
    input: PathBuf,
    #[command(flatten)]
    space: SpaceArgs,
    #[arg(long, value_delimiter = ',')]
    group_by: Option<Vec<String>>,
    /// Select the group with KEY=VALUE; repeat until exactly one group matches.
    #[arg(long, value_name = "KEY=VALUE")]
    group: Vec<String>,
    #[arg(long, value_enum, default_value_t = HasseModeArg::Edge)]
    hasse_mode: HasseModeArg,
    /// Decimals for node probabilities.
    #[arg(long, default_value_t = 2)]
    precision: u32,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum HasseModeArg {
    /// Compare only orders one swap apart.
    Edge,
    /// Transitive reduction of the full probability order.
    Full,
}

/// Problems with the command line that clap cannot see.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

const EXIT_USAGE: u8 = 1;
const EXIT_DATA: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<UsageError>() {
            return EXIT_USAGE;
        }
        if let Some(e) = cause.downcast_ref::<Error>() {
            return match e {
                Error::Capacity(_) | Error::Unsupported(_) => EXIT_CAPACITY,
                _ => EXIT_DATA,
            };
        }
    }
    EXIT_DATA
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Ensemble(args) => cmd_ensemble(args),
        Command::Export(ExportCommand::Permutohedron(args)) => cmd_permutohedron(args),
        Command::Export(ExportCommand::Hasse(args)) => cmd_hasse(args),
    }
}

fn resolve_alphabet(space: &SpaceArgs) -> anyhow::Result<Alphabet> {
    let alphabet = match (&space.alphabet, space.n) {
        (Some(symbols), _) => Alphabet::new(symbols).map_err(|e| usage(e.to_string()))?,
        (None, None | Some(3)) => Alphabet::default(),
        (None, Some(n)) => Alphabet::letters(n).map_err(|e| usage(e.to_string()))?,
    };
    if let Some(n) = space.n {
        if n != alphabet.len() {
            return Err(usage(format!(
                "--n {n} does not match the {}-symbol alphabet",
                alphabet.len()
            )));
        }
    }
    if alphabet.len() < 2 {
        return Err(usage("sequences need at least two constituents"));
    }
    Ok(alphabet)
}

fn build_space(alphabet: &Alphabet) -> anyhow::Result<Permutohedron> {
    let n = alphabet.len();
    Permutohedron::build(n).with_context(|| {
        format!("building the permutohedron for n = {n} (limit n = {DEFAULT_N_CAP})")
    })
}

fn load(
    input: &Path,
    alphabet: &Alphabet,
    group_by: Option<Vec<String>>,
) -> anyhow::Result<Vec<Group>> {
    let config = IngestConfig {
        alphabet: alphabet.clone(),
        group_by,
    };
    ingest_csv(input, &config).map_err(|e| anyhow::Error::new(Error::from(e)))
}

fn parse_filters(filters: &[String]) -> anyhow::Result<Vec<(String, String)>> {
    filters
        .iter()
        .map(|f| {
            f.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| usage(format!("expected KEY=VALUE, got '{f}'")))
        })
        .collect()
}

fn select(groups: Vec<Group>, filters: &[(String, String)]) -> anyhow::Result<Vec<Group>> {
    if let Some(first) = groups.first() {
        for (key, _) in filters {
            if first.key(key).is_none() {
                bail!(Error::InvalidArgument(format!(
                    "no group key column named '{key}'"
                )));
            }
        }
    }
    let kept: Vec<Group> = groups
        .into_iter()
        .filter(|g| filters.iter().all(|(k, v)| g.key(k) == Some(v.as_str())))
        .collect();
    if kept.is_empty() {
        bail!(Error::InvalidArgument(
            "no group matches the selection".into()
        ));
    }
    Ok(kept)
}

/// Groups are analysed on separate threads; rows come back in input order.
fn analyze_groups(
    p: &Permutohedron,
    groups: Vec<Group>,
    opts: &AnalyzeOptions,
) -> anyhow::Result<Vec<ReportRow>> {
    let results: Vec<_> = thread::scope(|s| {
        let handles: Vec<_> = groups
            .iter()
            .map(|g| s.spawn(move || analyze(p, &g.distribution, opts)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("analysis thread panicked"))
            .collect()
    });
    groups
        .into_iter()
        .zip(results)
        .map(|(g, report)| {
            let label = g.label();
            Ok(ReportRow {
                keys: g.keys,
                report: report.with_context(|| format!("group '{label}'"))?,
            })
        })
        .collect()
}

fn solver_options(args: &SolverArgs) -> AnalyzeOptions {
    AnalyzeOptions {
        enum_cap: args.enum_cap,
        verify_bruteforce: args.verify_bruteforce == Toggle::On,
    }
}

fn emit(output: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).context("writing to stdout")
        }
    }
}

fn json_text(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize") + "\n"
}

fn cmd_analyze(args: AnalyzeArgs) -> anyhow::Result<()> {
    let AnalyzeArgs { data, solver } = args;
    let alphabet = resolve_alphabet(&data.space)?;
    let p = build_space(&alphabet)?;
    let groups = load(&data.input, &alphabet, data.group_by)?;
    let rows = analyze_groups(&p, groups, &solver_options(&solver))?;
    let opts = RenderOptions {
        precision: data.render.precision,
        alphabet,
    };
    let text = match data.render.format {
        Format::Table => report_table(&rows, &opts),
        Format::Json => json_text(&report_json(&rows, &p, &opts)),
    };
    emit(data.render.output.as_deref(), &text)
}

fn cmd_ensemble(args: EnsembleArgs) -> anyhow::Result<()> {
    let EnsembleArgs {
        data,
        solver,
        filter,
    } = args;
    let alphabet = resolve_alphabet(&data.space)?;
    let filters = parse_filters(&filter)?;
    let p = build_space(&alphabet)?;
    let groups = select(load(&data.input, &alphabet, data.group_by)?, &filters)?;
    let rows = analyze_groups(&p, groups, &solver_options(&solver))?;
    let trials = rows
        .iter()
        .map(|row| {
            let label = row
                .keys
                .iter()
                .map(|(_, v)| v.as_str())
                .collect::<Vec<_>>()
                .join(" ");
            TrialRecord::from_report(label, &row.report, &p)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let result = run_ensemble(&trials)?;
    let opts = RenderOptions {
        precision: data.render.precision,
        alphabet,
    };
    let text = match data.render.format {
        Format::Table => ensemble_table(&result, &opts),
        Format::Json => json_text(&ensemble_json(&result)),
    };
    emit(data.render.output.as_deref(), &text)
}

fn cmd_permutohedron(args: PermutohedronArgs) -> anyhow::Result<()> {
    let alphabet = resolve_alphabet(&args.space)?;
    let p = build_space(&alphabet)?;
    emit(args.output.as_deref(), &permutohedron_dot(&p, &alphabet))
}

fn cmd_hasse(args: HasseArgs) -> anyhow::Result<()> {
    let alphabet = resolve_alphabet(&args.space)?;
    let filters = parse_filters(&args.group)?;
    let p = build_space(&alphabet)?;
    let mut groups = select(load(&args.input, &alphabet, args.group_by)?, &filters)?;
    if groups.len() != 1 {
        let labels: Vec<String> = groups.iter().map(Group::label).collect();
        return Err(anyhow!(Error::InvalidArgument(format!(
            "{} groups match ({}); add --group KEY=VALUE to pick one",
            groups.len(),
            labels.join(", ")
        ))));
    }
    let group = groups.remove(0);
    let mode = match args.hasse_mode {
        HasseModeArg::Edge => HasseMode::EdgeRestricted,
        HasseModeArg::Full => HasseMode::Full,
    };
    let h = hasse(&group.distribution.probs(), &p, mode)?;
    emit(
        args.output.as_deref(),
        &hasse_dot(&h, &p, &alphabet, args.precision),
    )
}
