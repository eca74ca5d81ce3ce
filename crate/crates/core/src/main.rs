//! Command-line front end: atlas inspection, Table-1 reproduction,
//! graph6-stream verification, and property sweeps.
//!
//! Exit codes: 0 all checks passed, 1 a mathematical check failed (witness
//! printed), 2 usage or I/O error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::io::{BufRead, Write};
use std::process::ExitCode;
use trifree::atlas::{
    base_graph, blow_up, closed_form_stats, computed_stats, BaseGraphId, BlowUpSpec,
};
use trifree::enumerate::{
    enumerate_base_case, sweep, BaseCaseRun, BaseCaseSpec, CheckKind, IterationStrategy,
    PartitionMode as EnumPartitionMode, SweepConfig, ALL_BASE_CASES, ALL_CHECKS,
};
use trifree::graph6::parse_graph6;
use trifree::partition::{
    self, enumerate_greedy_partitions, greedy_partition, partition_stats,
};
use trifree::report::VerificationReport;
use trifree::{packing, Error};

#[derive(Parser)]
#[command(name = "trifree", version, about = "K4-free triangle-count verification toolkit")]
struct Cli {
    /// worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// output file (default: stdout)
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PartitionModeArg {
    Deterministic,
    Exhaustive,
}

#[derive(Subcommand)]
enum Command {
    /// Print a base graph or blow-up with computed and closed-form stats
    Atlas(AtlasArgs),
    /// Reproduce the r = 3 base-case enumeration table
    Table1(Table1Args),
    /// Run checks on a graph6 stream
    Verify(VerifyArgs),
    /// Run checks over random or blow-up instance families
    Sweep(SweepArgs),
}

#[derive(Args)]
struct AtlasArgs {
    /// base graph id: F1, F2, F3, or F4
    id: String,
    /// blow-up multiplicities k1,k2,k3 (default 1,1,1)
    #[arg(long, value_parser = parse_triple)]
    k: Option<[u32; 3]>,
}

#[derive(Args)]
struct Table1Args {
    /// restrict to one part-size profile a,b,c
    #[arg(long, value_parser = parse_triple)]
    case: Option<[u32; 3]>,
    /// also iterate empty cross-edge subsets between free pairs
    #[arg(long)]
    include_empty_subsets: bool,
    /// iterate raw subsets for the seeded pair instead of iso classes
    #[arg(long)]
    naive: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// graph6 input file, one graph per line (default: stdin)
    #[arg(long)]
    input: Option<std::path::PathBuf>,
    /// comma-separated check names, or "all"
    #[arg(long, visible_alias = "check", default_value = "all")]
    checks: String,
    #[arg(long, value_enum, default_value_t = PartitionModeArg::Deterministic)]
    partition_mode: PartitionModeArg,
}

#[derive(Args)]
struct SweepArgs {
    /// vertex-count range lo..hi (inclusive)
    #[arg(long, value_parser = parse_range, default_value = "5..10")]
    n: (usize, usize),
    /// random instances per vertex count
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    /// base PRNG seed
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// edge-retention probability for random instances
    #[arg(long, default_value_t = 1.0)]
    density: f64,
    #[arg(long, visible_alias = "check", default_value = "all")]
    checks: String,
    #[arg(long, value_enum, default_value_t = PartitionModeArg::Deterministic)]
    partition_mode: PartitionModeArg,
    /// sweep blow-ups of this base graph instead of random instances
    #[arg(long)]
    family: Option<String>,
    /// max blow-up multiplicity per part (with --family)
    #[arg(long, default_value_t = 4)]
    kmax: u32,
}

fn parse_triple(s: &str) -> Result<[u32; 3], String> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|x| x.trim().parse().map_err(|e| format!("{e}")))
        .collect::<Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|_| format!("expected three comma-separated values, got {s:?}"))
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let lo = lo.trim().parse().map_err(|e| format!("{e}"))?;
    let hi = hi.trim().parse().map_err(|e| format!("{e}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

fn parse_checks(s: &str) -> Result<Vec<CheckKind>, Error> {
    if s == "all" {
        return Ok(ALL_CHECKS.to_vec());
    }
    s.split(',')
        .map(|name| {
            let name = name.trim();
            // short aliases used in docs
            let full = match name {
                "appendixA" => "appendixA-identity",
                "eq3" => "eq3-identity",
                other => other,
            };
            full.parse()
        })
        .collect()
}

/// true = all checks passed; false = a mathematical check failed.
type CmdResult = Result<bool, Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .is_err()
        {
            eprintln!("error: could not configure thread pool");
            return ExitCode::from(2);
        }
    }
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => match std::fs::File::create(path) {
            Ok(f) => Box::new(std::io::BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: cannot open {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(std::io::stdout().lock()),
    };
    let result = match &cli.command {
        Command::Atlas(args) => cmd_atlas(args, cli.format, &mut out),
        Command::Table1(args) => cmd_table1(args, cli.format, &mut out),
        Command::Verify(args) => cmd_verify(args, cli.format, &mut out),
        Command::Sweep(args) => cmd_sweep(args, cli.format, &mut out),
    };
    if out.flush().is_err() {
        return ExitCode::from(2);
    }
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn cmd_atlas(args: &AtlasArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let id: BaseGraphId = args.id.parse()?;
    let k = args.k.unwrap_or([1, 1, 1]);
    let spec = BlowUpSpec::new(id, k);
    let entry = if k == [1, 1, 1] {
        base_graph(id)?
    } else {
        blow_up(&spec)?
    };
    let computed = computed_stats(&entry);
    let closed = closed_form_stats(&spec);
    let graph6 = trifree::graph6::encode_graph6(&entry.graph);
    let agree = computed == closed;
    match format {
        Format::Json => {
            let obj = json!({
                "id": id.to_string(),
                "k": k,
                "graph6": graph6,
                "partition": entry.partition.parts,
                "computed": {"v": computed.v, "e": computed.e, "r": computed.r,
                             "t": computed.t, "g": computed.g},
                "closed_form": {"v": closed.v, "e": closed.e, "r": closed.r,
                                "t": closed.t, "g": closed.g},
                "agree": agree,
            });
            writeln!(out, "{obj}").map_err(io_err)?;
        }
        Format::Csv | Format::Text => {
            writeln!(out, "{id} k={},{},{} graph6={graph6}", k[0], k[1], k[2]).map_err(io_err)?;
            writeln!(
                out,
                "computed    (v,e,r,t) = ({}, {}, {}, {}), g = {}",
                computed.v, computed.e, computed.r, computed.t, computed.g
            )
            .map_err(io_err)?;
            writeln!(
                out,
                "closed-form (v,e,r,t) = ({}, {}, {}, {}), g = {}",
                closed.v, closed.e, closed.r, closed.t, closed.g
            )
            .map_err(io_err)?;
            writeln!(out, "agree: {agree}").map_err(io_err)?;
        }
    }
    Ok(agree)
}

fn table1_cases(args: &Table1Args) -> Result<Vec<BaseCaseSpec>, Error> {
    match args.case {
        Some([a, b, c]) => Ok(vec![BaseCaseSpec::new(a as usize, b as usize, c as usize)?]),
        None => Ok(ALL_BASE_CASES.to_vec()),
    }
}

fn cmd_table1(args: &Table1Args, format: Format, out: &mut dyn Write) -> CmdResult {
    let strategy = if args.naive {
        IterationStrategy::NaiveSubsets
    } else {
        IterationStrategy::SeededClasses
    };
    let mut runs: Vec<BaseCaseRun> = Vec::new();
    for spec in table1_cases(args)? {
        runs.push(enumerate_base_case(
            &spec,
            args.include_empty_subsets,
            strategy,
        )?);
    }
    let all_ok = runs
        .iter()
        .all(|r| r.theorem14_violations == 0 && r.omega_out_of_range == 0);
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(vec![]);
            w.write_record(["a", "b", "c", "constant", "class-count", "graph6-list", "t", "M2", "e"])
                .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            for run in &runs {
                let count = run.records.len().to_string();
                let (a, b, c) = (run.spec.a, run.spec.b, run.spec.c);
                let constant = run.spec.constant().to_string();
                if run.records.is_empty() {
                    w.write_record([
                        &a.to_string(), &b.to_string(), &c.to_string(), &constant,
                        &count, "", "", "", "",
                    ])
                    .map_err(|e| Error::InvalidArgument(e.to_string()))?;
                }
                for rec in &run.records {
                    w.write_record([
                        &a.to_string(), &b.to_string(), &c.to_string(), &constant,
                        &count, &rec.graph6, &rec.t.to_string(), &rec.m2.to_string(),
                        &rec.e.to_string(),
                    ])
                    .map_err(|e| Error::InvalidArgument(e.to_string()))?;
                }
            }
            let data = w.into_inner().map_err(|e| Error::InvalidArgument(e.to_string()))?;
            out.write_all(&data).map_err(io_err)?;
        }
        Format::Json => {
            for run in &runs {
                let classes: Vec<_> = run
                    .records
                    .iter()
                    .map(|r| {
                        json!({
                            "graph6": r.graph6, "t": r.t, "m2": r.m2, "e": r.e,
                            "matched": r.matched.map(|id| id.to_string()),
                        })
                    })
                    .collect();
                let obj = json!({
                    "a": run.spec.a, "b": run.spec.b, "c": run.spec.c,
                    "constant": run.spec.constant(),
                    "class_count": run.records.len(),
                    "classes": classes,
                    "visited": run.visited,
                    "theorem14_violations": run.theorem14_violations,
                });
                writeln!(out, "{obj}").map_err(io_err)?;
            }
        }
        Format::Text => {
            for run in &runs {
                writeln!(
                    out,
                    "case ({},{},{}): constant {}, {} violator class(es), {} graphs visited",
                    run.spec.a, run.spec.b, run.spec.c, run.spec.constant(),
                    run.records.len(), run.visited
                )
                .map_err(io_err)?;
                for rec in &run.records {
                    let tag = rec
                        .matched
                        .map(|id| id.to_string())
                        .unwrap_or_else(|| "unmatched".into());
                    writeln!(
                        out,
                        "  {tag}: graph6={} t={} M2={} e={}",
                        rec.graph6, rec.t, rec.m2, rec.e
                    )
                    .map_err(io_err)?;
                }
            }
        }
    }
    Ok(all_ok)
}

fn run_checks(
    g: &trifree::graph::Graph,
    p: &trifree::partition::CliquePartition,
    checks: &[CheckKind],
    reports: &mut Vec<VerificationReport>,
) -> Result<(), Error> {
    let stats = partition_stats(g, p)?;
    let packing_result = checks
        .iter()
        .any(CheckKind::needs_packing)
        .then(|| packing::max_edge_disjoint_triangles(g));
    for check in checks {
        let report = match check {
            CheckKind::MainTheorem => partition::main_theorem_report(g, p, &stats),
            CheckKind::Conjecture12 => partition::conjecture12_report(g, p, &stats),
            CheckKind::Eq3Identity => partition::eq3_identity_report(g, p, &stats),
            CheckKind::Lemma31 => partition::lemma31_report(g, p, &stats),
            CheckKind::KeyLemma => partition::key_lemma_report(g, p, &stats),
            CheckKind::AppendixAIdentity => partition::appendix_a_identity_report(g, p, &stats),
            packing_check => match packing_result.as_ref().unwrap() {
                Err(Error::UnsupportedSize(_)) => continue,
                Err(e) => return Err(e.clone()),
                Ok(packing) => match packing_check {
                    CheckKind::HuangShi => packing::huang_shi_report(g, p, &stats, packing),
                    CheckKind::Theorem11 => packing::theorem11_report(g, packing),
                    CheckKind::ConjectureTe => {
                        packing::conjecture_te_report(g, p, &stats, packing)
                    }
                    _ => unreachable!(),
                },
            },
        };
        reports.push(report);
    }
    Ok(())
}

fn emit_reports(
    reports: &[VerificationReport],
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Error> {
    match format {
        Format::Json | Format::Csv => {
            for r in reports {
                let line = serde_json::to_string(r)
                    .map_err(|e| Error::InvalidArgument(e.to_string()))?;
                writeln!(out, "{line}").map_err(io_err)?;
            }
        }
        Format::Text => {
            for r in reports {
                writeln!(
                    out,
                    "{} {} lhs={} rhs={} holds={}",
                    r.check, r.graph6, r.lhs, r.rhs, r.holds
                )
                .map_err(io_err)?;
            }
        }
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let checks = parse_checks(&args.checks)?;
    let lines: Vec<String> = match &args.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(io_err)?
            .lines()
            .map(str::to_string)
            .collect(),
        None => std::io::stdin()
            .lock()
            .lines()
            .collect::<Result<_, _>>()
            .map_err(io_err)?,
    };
    let mut reports = Vec::new();
    for line in lines.iter().map(|l| l.trim()).filter(|l| !l.is_empty()) {
        let g = parse_graph6(line)?;
        let partitions = match args.partition_mode {
            PartitionModeArg::Deterministic => vec![greedy_partition(&g)?],
            PartitionModeArg::Exhaustive => enumerate_greedy_partitions(&g, usize::MAX)?,
        };
        for p in &partitions {
            run_checks(&g, p, &checks, &mut reports)?;
        }
    }
    reports.sort_by(|x, y| (&x.graph6, &x.check).cmp(&(&y.graph6, &y.check)));
    emit_reports(&reports, format, out)?;
    Ok(reports.iter().all(|r| r.holds))
}

fn cmd_sweep(args: &SweepArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let config = SweepConfig {
        n_lo: args.n.0,
        n_hi: args.n.1,
        seeds: args.seeds,
        base_seed: args.seed,
        density: args.density,
        checks: parse_checks(&args.checks)?,
        partition_mode: match args.partition_mode {
            PartitionModeArg::Deterministic => EnumPartitionMode::Deterministic,
            PartitionModeArg::Exhaustive => EnumPartitionMode::Exhaustive,
        },
        family: match &args.family {
            Some(id) => Some((id.parse()?, args.kmax)),
            None => None,
        },
    };
    let outcome = sweep(&config)?;
    match format {
        Format::Json | Format::Csv => {
            let summary = json!({
                "seed": args.seed,
                "version": env!("CARGO_PKG_VERSION"),
                "instances": outcome.instances,
                "checks_run": outcome.checks_run,
                "skipped": outcome.skipped,
                "violations": outcome.violations.len(),
            });
            writeln!(out, "{summary}").map_err(io_err)?;
        }
        Format::Text => {
            writeln!(
                out,
                "seed={} instances={} checks_run={} skipped={} violations={}",
                args.seed, outcome.instances, outcome.checks_run, outcome.skipped,
                outcome.violations.len()
            )
            .map_err(io_err)?;
        }
    }
    emit_reports(&outcome.violations, format, out)?;
    Ok(outcome.violations.is_empty())
}

fn io_err(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("I/O error: {e}"))
}
