//! Benchmark harness.
//!
//! A suite is a JSON file:
//!
//! ```json
//! {"runs": [{"n": 100, "p": 0.1, "dist": "uniform", "low": -8, "high": 8,
//!            "mode": "detect", "seeds": [1, 2, 3]}]}
//! ```
//!
//! `mode` is one of `detect`, `sparse`, `count`, `min`. Optional keys:
//! `target` (default 0), `delta` (sparse), `bound` (min).

use std::fs::{self, File};
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::Args;
use nwt_core::min::min_triangle_with_bound;
use nwt_core::{count, detect, detect_sparse, generate_random, CostLedger, RandomGraphParams, WeightDistribution};
use serde::{Deserialize, Serialize};

#[derive(Args)]
pub struct BenchArgs {
    /// Suite description (JSON).
    #[arg(long)]
    pub suite: PathBuf,
    /// CSV destination; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write 0 in the wall-time column so output is reproducible.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Detect,
    Sparse,
    Count,
    Min,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RunSpec {
    n: usize,
    p: f64,
    #[serde(default = "uniform")]
    dist: String,
    #[serde(default)]
    low: i64,
    #[serde(default)]
    high: i64,
    mode: Mode,
    seeds: Vec<u64>,
    #[serde(default)]
    target: i64,
    delta: Option<usize>,
    bound: Option<u64>,
}

fn uniform() -> String {
    "uniform".to_string()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Suite {
    runs: Vec<RunSpec>,
}

#[derive(Debug, Serialize)]
struct Row {
    n: usize,
    m: usize,
    mode: Mode,
    wall_time_ns: u128,
    word_ops: u64,
    #[serde(rename = "sum_XY_YZ_XZ")]
    slice_entries: u128,
    detect_calls: u64,
    result: String,
    dist: String,
    p: f64,
    seed: u64,
}

fn measure(spec: &RunSpec, dist: WeightDistribution, seed: u64, timing: bool) -> Result<Row> {
    let g = generate_random(&RandomGraphParams {
        n: spec.n,
        p: spec.p,
        weight_low: spec.low,
        weight_high: spec.high,
        seed,
        distribution: dist,
    })?;
    let mut ledger = CostLedger::new();
    let start = Instant::now();
    let result = match spec.mode {
        Mode::Detect => found(detect(&g, spec.target, &mut ledger).is_some()),
        Mode::Sparse => found(detect_sparse(&g, spec.target, spec.delta, &mut ledger).is_some()),
        Mode::Count => count(&g, spec.target, &mut ledger)?.total.to_string(),
        Mode::Min => match min_triangle_with_bound(&g, spec.bound, &mut ledger)? {
            Some(best) => best.sum.to_string(),
            None => "none".to_string(),
        },
    };
    let elapsed = start.elapsed().as_nanos();
    let totals = ledger.totals();
    Ok(Row {
        n: g.n(),
        m: g.m(),
        mode: spec.mode,
        wall_time_ns: if timing { elapsed } else { 0 },
        word_ops: totals.word_ops,
        slice_entries: totals.slice_entries,
        detect_calls: ledger.detect_calls(),
        result,
        dist: dist.to_string(),
        p: spec.p,
        seed,
    })
}

fn found(hit: bool) -> String {
    if hit { "found" } else { "none" }.to_string()
}

pub fn run(args: &BenchArgs) -> Result<u8> {
    let text = fs::read_to_string(&args.suite).with_context(|| format!("cannot read {}", args.suite.display()))?;
    let suite: Suite = serde_json::from_str(&text).context("malformed suite")?;
    let sink: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(File::create(path).with_context(|| format!("cannot write {}", path.display()))?),
        None => Box::new(io::stdout().lock()),
    };
    let mut out = csv::Writer::from_writer(sink);
    for spec in &suite.runs {
        let dist: WeightDistribution = spec.dist.parse()?;
        for &seed in &spec.seeds {
            out.serialize(measure(spec, dist, seed, !args.no_timing)?)?;
        }
    }
    out.flush()?;
    Ok(0)
}
