use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lowspace::generate::{generate_instance, GenParams, InstanceKind};
use lowspace::io::{parse_graph_file, parse_multicut_file};
use lowspace::oracles::{oracle_kpath, oracle_maxleaf, oracle_multicut_cut};
use lowspace::{
    solve_kpath_jobs, solve_maxleaf_jobs, solve_multicut, ConnectivityStrategy, Error, Graph,
    LeafLabelledTree, MulticutInstance, SpaceReport, Vertex, WorkspaceMeter,
};

#[derive(Parser)]
#[command(
    name = "lowspace",
    version,
    about = "Space-bounded solvers for k-Path, MaxLeaf Subtree and Multicut in Trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Is there a simple path on k vertices?
    Kpath(Solve),
    /// Is there a rooted subtree with at least k leaves?
    Maxleaf(Solve),
    /// Can at most k tree edges separate every demand pair?
    Multicut(SolveMulticut),
    /// Answer with the brute-force reference instead of the solver.
    Oracle {
        problem: Problem,
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        k: usize,
        /// Print the witness cut (multicut only).
        #[arg(long)]
        certificate: bool,
    },
    /// Print a seeded random instance.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability for gnp.
        #[arg(long)]
        p: Option<f64>,
        /// Number of demand pairs; turns a tree into a multicut instance.
        #[arg(long)]
        pairs: Option<usize>,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Input {
    /// Instance file.
    #[arg(long, visible_alias = "instance", value_name = "FILE")]
    graph: PathBuf,
}

#[derive(Args)]
struct Common {
    #[arg(short)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Conn::Savitch)]
    conn: Conn,
    /// Append a space report.
    #[arg(long, value_enum)]
    report: Option<ReportFormat>,
    /// Print the witness after the answer.
    #[arg(long)]
    certificate: bool,
}

#[derive(Args)]
struct Solve {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    common: Common,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct SolveMulticut {
    /// Instance file.
    #[arg(long, visible_alias = "graph", value_name = "FILE")]
    instance: PathBuf,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Kpath,
    Maxleaf,
    Multicut,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Gnp,
    Tree,
    Path,
    Star,
}

#[derive(Clone, Copy, ValueEnum)]
enum Conn {
    Savitch,
    Bfs,
}

impl From<Conn> for ConnectivityStrategy {
    fn from(c: Conn) -> Self {
        match c {
            Conn::Savitch => ConnectivityStrategy::Savitch,
            Conn::Bfs => ConnectivityStrategy::BfsReference,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    parse_graph_file(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_instance(path: &Path) -> Result<MulticutInstance, String> {
    parse_multicut_file(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn fail(e: Error) -> String {
    e.to_string()
}

fn list(vs: &[Vertex]) -> String {
    if vs.is_empty() {
        return "-".into();
    }
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn tree_line(t: &LeafLabelledTree) -> String {
    format!(
        "tree: root {}; red {}; blue {}",
        t.root,
        list(&t.red),
        list(&t.blue)
    )
}

fn cut_line(cut: &[(Vertex, Vertex)]) -> String {
    let edges: Vec<String> = cut.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("cut: {}", edges.join(" "))
}

struct Outcome {
    answer: bool,
    certificate: Option<String>,
    report: Option<SpaceReport>,
}

fn emit(outcome: &Outcome, certificate: bool, format: Option<ReportFormat>) -> Result<(), String> {
    println!("{}", if outcome.answer { "YES" } else { "NO" });
    if certificate {
        if let Some(c) = &outcome.certificate {
            println!("{c}");
        }
    }
    if let (Some(format), Some(report)) = (format, &outcome.report) {
        match format {
            ReportFormat::Text => println!("{report}"),
            ReportFormat::Json => println!(
                "{}",
                serde_json::to_string_pretty(report).map_err(|e| e.to_string())?
            ),
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Kpath(args) => {
            let g = load_graph(&args.input.graph)?;
            let strategy = args.common.conn.into();
            let started = Instant::now();
            let (out, peak) =
                solve_kpath_jobs(&g, args.common.k, strategy, args.jobs).map_err(fail)?;
            let report = SpaceReport::new(
                "kpath",
                g.n(),
                args.common.k,
                strategy.name(),
                out.answer,
                peak,
            )
            .counter("colourings_tried", out.colourings_tried)
            .counter("sequences_tried", out.sequences_tried)
            .counter("jobs", args.jobs.max(1) as u64)
            .wall_time(started.elapsed());
            let outcome = Outcome {
                answer: out.answer,
                certificate: None,
                report: Some(report),
            };
            emit(&outcome, args.common.certificate, args.common.report)?;
            Ok(out.answer)
        }
        Command::Maxleaf(args) => {
            let g = load_graph(&args.input.graph)?;
            let strategy = args.common.conn.into();
            let started = Instant::now();
            let (out, peak) =
                solve_maxleaf_jobs(&g, args.common.k, strategy, args.jobs).map_err(fail)?;
            let report = SpaceReport::new(
                "maxleaf",
                g.n(),
                args.common.k,
                strategy.name(),
                out.answer,
                peak,
            )
            .counter("recursion_nodes", out.recursion_nodes)
            .counter("max_nodes_per_root", out.max_nodes_per_root)
            .counter("jobs", args.jobs.max(1) as u64)
            .wall_time(started.elapsed());
            let outcome = Outcome {
                answer: out.answer,
                certificate: out.witness.as_ref().map(tree_line),
                report: Some(report),
            };
            emit(&outcome, args.common.certificate, args.common.report)?;
            Ok(out.answer)
        }
        Command::Multicut(args) => {
            let inst = load_instance(&args.instance)?;
            let strategy = args.common.conn.into();
            let meter = WorkspaceMeter::new();
            let started = Instant::now();
            let out = solve_multicut(&inst, args.common.k, strategy, &meter).map_err(fail)?;
            let n = inst.tree().n();
            let report = SpaceReport::new(
                "multicut",
                n,
                args.common.k,
                strategy.name(),
                out.answer,
                meter.peak(),
            )
            .counter("recursion_nodes", out.recursion_nodes)
            .counter("max_cut_size", out.max_cut_size as u64)
            .counter("pairs", inst.pairs().len() as u64)
            .wall_time(started.elapsed());
            let outcome = Outcome {
                answer: out.answer,
                certificate: out.certificate.as_deref().map(cut_line),
                report: Some(report),
            };
            emit(&outcome, args.common.certificate, args.common.report)?;
            Ok(out.answer)
        }
        Command::Oracle {
            problem,
            input,
            k,
            certificate,
        } => {
            let outcome = match problem {
                Problem::Kpath => Outcome {
                    answer: oracle_kpath(&load_graph(&input.graph)?, k).map_err(fail)?,
                    certificate: None,
                    report: None,
                },
                Problem::Maxleaf => Outcome {
                    answer: oracle_maxleaf(&load_graph(&input.graph)?, k).map_err(fail)?,
                    certificate: None,
                    report: None,
                },
                Problem::Multicut => {
                    let cut =
                        oracle_multicut_cut(&load_instance(&input.graph)?, k).map_err(fail)?;
                    Outcome {
                        answer: cut.is_some(),
                        certificate: cut.as_deref().map(cut_line),
                        report: None,
                    }
                }
            };
            emit(&outcome, certificate, None)?;
            Ok(outcome.answer)
        }
        Command::Gen {
            kind,
            n,
            seed,
            p,
            pairs,
            output,
        } => {
            let kind = match kind {
                Kind::Gnp => InstanceKind::Gnp,
                Kind::Tree => InstanceKind::Tree,
                Kind::Path => InstanceKind::Path,
                Kind::Star => InstanceKind::Star,
            };
            let text = generate_instance(kind, n, seed, GenParams { p, pairs }).map_err(fail)?;
            match output {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?
                }
                None => print!("{text}"),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
