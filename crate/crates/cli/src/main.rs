mod bench;
mod input;
mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use nwt_core::min::min_triangle_with_bound;
use nwt_core::{
    count, detect, detect_sparse, generate_random, CostLedger, RandomGraphParams, Rational, TriangleWitness,
    WeightDistribution, Weight, WeightedGraph,
};
use serde::Serialize;
use serde_json::Value;

use input::{load_graph, number_or_string, parse_target, render_graph, Format};

#[derive(Parser)]
#[command(name = "nwt", version, about = "Node-weighted triangle detection, counting and minimization")]
struct Cli {
    /// Worker threads for the matrix kernels.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a triangle whose weights sum to the target.
    Detect(DetectArgs),
    /// Count target-weight triangles, split by how many weights coincide.
    Count(CountArgs),
    /// Find a minimum-weight (or with --max, maximum-weight) triangle.
    Min(MinArgs),
    /// Write a random graph.
    Gen(GenArgs),
    /// Compare the fast paths against brute force.
    Verify(verify::VerifyArgs),
    /// Run a benchmark suite and write one CSV row per run.
    Bench(bench::BenchArgs),
}

#[derive(Args)]
struct GraphInput {
    /// Graph file; standard input when omitted or `-`.
    path: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Graph)]
    format: Format,
    /// Read weights as exact rationals `p/q`.
    #[arg(long)]
    rational: bool,
}

#[derive(Args)]
struct DetectArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    target: String,
    /// Split by degree and enumerate low-degree neighborhoods first.
    #[arg(long)]
    sparse: bool,
    /// Degree threshold for --sparse.
    #[arg(long, requires = "sparse")]
    delta: Option<usize>,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    target: String,
}

#[derive(Args)]
struct MinArgs {
    path: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Graph)]
    format: Format,
    /// Maximize instead.
    #[arg(long)]
    max: bool,
    /// Upper bound on |weight| to scale from.
    #[arg(long)]
    bound: Option<u64>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = -8, allow_hyphen_values = true)]
    low: i64,
    #[arg(long, default_value_t = 8, allow_hyphen_values = true)]
    high: i64,
    #[arg(long, default_value = "uniform")]
    dist: WeightDistribution,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Graph)]
    format: Format,
    /// Output file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Witness ids are printed in ascending order.
#[derive(Serialize)]
struct TriangleReport {
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sum: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    detect_calls: Option<u64>,
}

impl TriangleReport {
    fn new<W: Weight>(hit: Option<&TriangleWitness<W>>) -> Self {
        TriangleReport {
            found: hit.is_some(),
            witness: hit.map(|w| {
                let mut ids = w.vertices();
                ids.sort_unstable();
                ids
            }),
            sum: hit.map(|w| number_or_string(&w.weight_sum.to_string())),
            detect_calls: None,
        }
    }
}

#[derive(Serialize)]
struct CountReport {
    type1: u64,
    type2: u64,
    type3: u64,
    total: u64,
    raw_type1: u64,
    raw_type2: u64,
}

/// Exit status for "ran fine, nothing found".
const NOT_FOUND: u8 = 1;
/// Exit status for bad input or arguments.
const INPUT_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT_ERROR } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.max(1))
        .build_global()
        .context("cannot start thread pool")?;
    match cli.command {
        Command::Detect(args) if args.input.rational => run_detect::<Rational>(&args),
        Command::Detect(args) => run_detect::<i64>(&args),
        Command::Count(args) if args.input.rational => run_count::<Rational>(&args),
        Command::Count(args) => run_count::<i64>(&args),
        Command::Min(args) => run_min(&args),
        Command::Gen(args) => run_gen(&args),
        Command::Verify(args) => verify::run(&args),
        Command::Bench(args) => bench::run(&args),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn found_code(found: bool) -> u8 {
    if found {
        0
    } else {
        NOT_FOUND
    }
}

fn run_detect<W: Weight>(args: &DetectArgs) -> Result<u8> {
    let g: WeightedGraph<W> = load_graph(args.input.path.as_deref(), args.input.format)?;
    let target = parse_target::<W>(&args.target)?;
    let mut ledger = CostLedger::new();
    let hit = if args.sparse {
        detect_sparse(&g, target, args.delta, &mut ledger)
    } else {
        detect(&g, target, &mut ledger)
    };
    print_json(&TriangleReport::new(hit.as_ref()))?;
    Ok(found_code(hit.is_some()))
}

fn run_count<W: Weight>(args: &CountArgs) -> Result<u8> {
    let g: WeightedGraph<W> = load_graph(args.input.path.as_deref(), args.input.format)?;
    let target = parse_target::<W>(&args.target)?;
    let b = count(&g, target, &mut CostLedger::new())?;
    print_json(&CountReport {
        type1: b.type1,
        type2: b.type2,
        type3: b.type3,
        total: b.total,
        raw_type1: b.raw_type1,
        raw_type2: b.raw_type2,
    })?;
    Ok(0)
}

fn run_min(args: &MinArgs) -> Result<u8> {
    let g: WeightedGraph<i64> = load_graph(args.path.as_deref(), args.format)?;
    let g = if args.max {
        if g.weights().contains(&i64::MIN) {
            anyhow::bail!("weight {} cannot be negated", i64::MIN);
        }
        g.map_weights(|w| -w)
    } else {
        g
    };
    let mut ledger = CostLedger::new();
    let best = min_triangle_with_bound(&g, args.bound, &mut ledger)?;
    let mut report = TriangleReport::new(best.as_ref().map(|b| &b.witness));
    if let Some(b) = &best {
        let sum = if args.max { -b.sum } else { b.sum };
        report.sum = Some(number_or_string(&sum.to_string()));
    }
    report.detect_calls = Some(ledger.detect_calls());
    print_json(&report)?;
    Ok(found_code(best.is_some()))
}

fn run_gen(args: &GenArgs) -> Result<u8> {
    let g = generate_random(&RandomGraphParams {
        n: args.n,
        p: args.p,
        weight_low: args.low,
        weight_high: args.high,
        seed: args.seed,
        distribution: args.dist,
    })?;
    let text = render_graph(&g, args.format)?;
    match &args.out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(0)
}
