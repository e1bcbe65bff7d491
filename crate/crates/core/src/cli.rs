//! Command-line front end. The binary is a thin wrapper around [`run`].

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{family_groups, full_corpus, small_groups};
use crate::classify::{classify_subgroups, ClassificationRow};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::example864::{analyze_example_864, Example864Report};
use crate::formations::Formation;
use crate::io::{corpus_files, parse_spec, write_spec, GroupSpecFile};
use crate::verify::{run_corpus, CorpusEntry, CorpusReport, LemmaStatus, Mode};

#[derive(Debug, Parser)]
#[command(name = "formgroups", version, about = "Formation-theoretic subgroup analysis of permutation groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for randomized sifting when building groups from files.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Worker threads for corpus sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every conjugacy class of subgroups of the group in a file.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value = "N")]
        formation: String,
    },
    /// Check the primary-cyclic equivalence (self-normalizing variant).
    VerifyTheorem(SweepArgs),
    /// Check the primary-cyclic equivalence (abnormal variant).
    VerifyCorollary(SweepArgs),
    /// Run the lemma property suites.
    VerifyLemmas(SweepArgs),
    /// Build the order-864 group and report its properties.
    #[command(name = "example-864")]
    Example864,
    /// Write the built-in corpus as group files.
    ExportCorpus { dir: PathBuf },
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// A, N, U, NA, S or a product such as N*A.
    #[arg(long)]
    pub formation: String,
    #[arg(long, default_value_t = 200)]
    pub order_max: u64,
    /// Directory of group files; defaults to the built-in corpus.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
}

/// Exit code for an error that stopped a command.
pub fn error_code(e: &Error) -> i32 {
    if e.is_resource() {
        3
    } else {
        2
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match execute(&cli) {
        Ok((text, code)) => match emit(cli.out.as_deref(), &text) {
            Ok(()) => code,
            Err(e) => {
                eprintln!("error: {e}");
                error_code(&e)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            error_code(&e)
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => Ok(std::fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn config(cli: &Cli) -> Config {
    let c = Config::default();
    match cli.seed {
        Some(s) => c.with_seed(s),
        None => c,
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    match &cli.command {
        Command::Analyze { file, formation } => analyze(cli, file, formation),
        Command::VerifyTheorem(a) => sweep(cli, a, Mode::Theorem),
        Command::VerifyCorollary(a) => sweep(cli, a, Mode::Corollary),
        Command::VerifyLemmas(a) => sweep(cli, a, Mode::Lemmas),
        Command::Example864 => {
            let report = analyze_example_864()?;
            let code = if report.all_hold() { 0 } else { 1 };
            let text = match cli.format {
                Format::Json => json(&report),
                Format::Table => example_table(&report),
            };
            Ok((text, code))
        }
        Command::ExportCorpus { dir } => {
            let mut written = Vec::new();
            for (sub, entries) in [("soluble_le_24", small_groups()?), ("family_le_200", family_groups()?)] {
                for e in entries {
                    let spec = GroupSpecFile::describe(&e.name, &e.group, &e.tags());
                    written.push(write_spec(&dir.join(sub), &e.id, &spec)?.display().to_string());
                }
            }
            Ok((written.join("\n") + "\n", 0))
        }
    }
}

#[derive(Serialize)]
struct AnalysisReport {
    group: String,
    order: u64,
    formation: String,
    subgroups: Vec<ClassificationRow>,
}

fn analyze(cli: &Cli, file: &Path, formation: &str) -> Result<(String, i32)> {
    let f = Formation::by_name(formation)?;
    let text = std::fs::read_to_string(file)?;
    let spec = parse_spec(&text)?;
    let g = spec.build_with(config(cli))?;
    let rows: Vec<ClassificationRow> = classify_subgroups(&f, &g)?.iter().map(|c| c.row()).collect();
    let report = AnalysisReport { group: spec.name, order: g.order(), formation: f.name().to_string(), subgroups: rows };
    let text = match cli.format {
        Format::Json => json(&report),
        Format::Table => {
            let mut s = format!("{} (order {}), formation {}\n", report.group, report.order, report.formation);
            let _ = writeln!(s, "{:>6}  {:<11} {:<11} {:<17} {:<14} generators", "order", "subnormal", "abnormal", "self-normalizing", "chain");
            for r in &report.subgroups {
                let chain = r.chain_orders.as_ref().map(|c| format!("{c:?}")).unwrap_or_else(|| "-".into());
                let _ = writeln!(
                    s,
                    "{:>6}  {:<11} {:<11} {:<17} {:<14} {}",
                    r.order,
                    r.f_subnormal,
                    r.f_abnormal,
                    r.self_normalizing,
                    chain,
                    r.generators.join(" ")
                );
            }
            s
        }
    };
    Ok((text, 0))
}

fn load_corpus(cli: &Cli, args: &SweepArgs) -> Result<Vec<CorpusEntry>> {
    let entries: Vec<CorpusEntry> = match &args.corpus {
        None => full_corpus()?.into_iter().map(|e| CorpusEntry::new(e.id, e.group)).collect(),
        Some(dir) => corpus_files(dir)?
            .into_iter()
            .map(|path| {
                let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                let group = std::fs::read_to_string(&path)
                    .map_err(Error::from)
                    .and_then(|text| parse_spec(&text))
                    .and_then(|spec| spec.build_with(config(cli)));
                CorpusEntry { name, group }
            })
            .collect(),
    };
    Ok(entries.into_iter().filter(|e| e.group.as_ref().map_or(true, |g| g.order() <= args.order_max)).collect())
}

fn sweep(cli: &Cli, args: &SweepArgs, mode: Mode) -> Result<(String, i32)> {
    let f = Formation::by_name(&args.formation)?;
    let corpus = load_corpus(cli, args)?;
    let report = match cli.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Construction(format!("worker pool: {e}")))?
            .install(|| run_corpus(&corpus, &f, mode)),
        None => run_corpus(&corpus, &f, mode),
    };
    let text = match cli.format {
        Format::Json => json(&report),
        Format::Table => sweep_table(&report),
    };
    Ok((text, report.exit_code()))
}

fn flag(b: bool) -> char {
    if b {
        'T'
    } else {
        'F'
    }
}

fn sweep_table(report: &CorpusReport) -> String {
    let mut s = format!("formation {}\n", report.formation);
    for e in &report.entries {
        let order = e.order.map(|o| o.to_string()).unwrap_or_else(|| "?".into());
        if let Some(err) = &e.error {
            let _ = writeln!(s, "{:<28} {:>5}  ERROR {err}", e.name, order);
        }
        for r in &e.reports {
            let vector = r
                .statements
                .as_ref()
                .map(|v| format!("({},{},{})", flag(v.s1), flag(v.s2), flag(v.s3)))
                .unwrap_or_else(|| "-".into());
            let check = format!("{:?}", r.check).to_lowercase();
            let _ = writeln!(s, "{:<28} {:>5}  {:<9} {:<18} {}", e.name, order, check, r.status.label(), vector);
        }
        for l in &e.lemmas {
            if l.status == LemmaStatus::Violated {
                for v in &l.violations {
                    let _ = writeln!(s, "{:<28} {:>5}  VIOLATED {}: {v}", e.name, order, l.lemma.name());
                }
            }
        }
    }
    let counts: Vec<String> = report.totals.by_status.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let _ = writeln!(
        s,
        "totals: {} lemma_violations={} errors={}",
        counts.join(" "),
        report.totals.lemma_violations,
        report.totals.errors
    );
    s
}

fn example_table(r: &Example864Report) -> String {
    let mut s = format!("order {}, chosen involution {}\n", r.order, r.selection.chosen);
    let _ = writeln!(s, "survivors: {}", r.selection.survivors.join(", "));
    for f in r.facts.iter().chain(&r.properties) {
        let _ = writeln!(s, "{:<5} {:<50} {}", if f.holds { "ok" } else { "FAIL" }, f.name, f.observed);
    }
    s
}
