//! Cross-check against the brute-force reference.

use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use nwt_core::oracle::{brute_count, brute_detect, brute_min};
use nwt_core::{
    count, detect, detect_sparse, generate_random, min_triangle, CostLedger, RandomGraphParams, Rational,
    WeightDistribution, Weight, WeightedGraph,
};

use crate::input::{load_graph, parse_target, Format};

#[derive(Args)]
pub struct VerifyArgs {
    /// Graph file to check; random instances are generated when omitted.
    pub path: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Graph)]
    pub format: Format,
    #[arg(long)]
    pub rational: bool,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub target: String,
    #[arg(long, conflicts_with = "path", required_unless_present = "path")]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    #[arg(long, default_value_t = -8, allow_hyphen_values = true)]
    pub low: i64,
    #[arg(long, default_value_t = 8, allow_hyphen_values = true)]
    pub high: i64,
    #[arg(long, default_value = "uniform")]
    pub dist: WeightDistribution,
    /// Trial `i` uses seed `seed + i`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub trials: u64,
}

/// Detection (dense and sparse) and counting agree with brute force.
fn agrees<W: Weight>(g: &WeightedGraph<W>, target: W) -> Result<bool> {
    let mut ledger = CostLedger::new();
    let expected = brute_detect(g, target).is_some();
    let dense = detect(g, target, &mut ledger);
    let sparse = detect_sparse(g, target, None, &mut ledger);
    let witnesses_ok = [&dense, &sparse].iter().all(|w| w.as_ref().is_none_or(|w| w.is_valid_in(g)));
    let counted = count(g, target, &mut ledger)?;
    let reference = brute_count(g, target);
    let counts_ok = (counted.type1, counted.type2, counted.type3, counted.total)
        == (reference.type1, reference.type2, reference.type3, reference.total);
    Ok(dense.is_some() == expected && sparse.is_some() == expected && witnesses_ok && counts_ok)
}

fn min_agrees(g: &WeightedGraph<i64>) -> Result<bool> {
    let got = min_triangle(g, &mut CostLedger::new())?.map(|m| (m.sum, m.witness.is_valid_in(g)));
    let want = brute_min(g).map(|w| (w.weight_sum, true));
    Ok(got == want)
}

pub fn run(args: &VerifyArgs) -> Result<u8> {
    let (agreed, total) = match args.n {
        None if args.rational => {
            let g: WeightedGraph<Rational> = load_graph(args.path.as_deref(), args.format)?;
            let ok = agrees(&g, parse_target::<Rational>(&args.target)?)?;
            (u64::from(ok), 1)
        }
        None => {
            let g: WeightedGraph<i64> = load_graph(args.path.as_deref(), args.format)?;
            let ok = agrees(&g, parse_target::<i64>(&args.target)?)? && min_agrees(&g)?;
            (u64::from(ok), 1)
        }
        Some(n) => {
            let target = parse_target::<i64>(&args.target)?;
            let mut agreed = 0;
            for i in 0..args.trials {
                let seed = args.seed.wrapping_add(i);
                let g = generate_random(&RandomGraphParams {
                    n,
                    p: args.p,
                    weight_low: args.low,
                    weight_high: args.high,
                    seed,
                    distribution: args.dist,
                })
                .context("cannot generate instance")?;
                if agrees(&g, target)? && min_agrees(&g)? {
                    agreed += 1;
                } else {
                    eprintln!("disagreement at seed {seed}");
                }
            }
            (agreed, args.trials)
        }
    };
    println!("{agreed}/{total} agree");
    Ok(if agreed == total { 0 } else { 1 })
}
