//! Seeded random instances.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Zipf};
use thiserror::Error;

use crate::graph::WeightedGraph;

/// How vertex weights are drawn from `[low, high]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightDistribution {
    Uniform,
    /// Zipf with exponent 1 over the range; `low` is the most frequent value.
    Zipf,
    /// Every vertex gets `low`.
    Constant,
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightDistribution::Uniform => "uniform",
            WeightDistribution::Zipf => "zipf",
            WeightDistribution::Constant => "constant",
        })
    }
}

impl FromStr for WeightDistribution {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(WeightDistribution::Uniform),
            "zipf" => Ok(WeightDistribution::Zipf),
            "constant" => Ok(WeightDistribution::Constant),
            other => Err(GenerateError::UnknownDistribution(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("edge probability {0} is outside [0, 1]")]
    Probability(f64),
    #[error("empty weight range [{0}, {1}]")]
    WeightRange(i64, i64),
    #[error("unknown weight distribution `{0}`")]
    UnknownDistribution(String),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomGraphParams {
    pub n: usize,
    pub p: f64,
    pub weight_low: i64,
    pub weight_high: i64,
    pub seed: u64,
    pub distribution: WeightDistribution,
}

/// Erdős–Rényi `G(n, p)` with integer weights. Weights are drawn first
/// (vertex order), then one Bernoulli trial per pair `u < v` in
/// lexicographic order, all from a single ChaCha8 stream seeded with `seed`.
pub fn generate_random(params: &RandomGraphParams) -> Result<WeightedGraph<i64>, GenerateError> {
    let RandomGraphParams { n, p, weight_low: lo, weight_high: hi, seed, distribution } = *params;
    if !(0.0..=1.0).contains(&p) {
        return Err(GenerateError::Probability(p));
    }
    if lo > hi {
        return Err(GenerateError::WeightRange(lo, hi));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights: Vec<i64> = match distribution {
        WeightDistribution::Constant => vec![lo; n],
        WeightDistribution::Uniform => (0..n).map(|_| rng.random_range(lo..=hi)).collect(),
        WeightDistribution::Zipf => {
            let span = (hi as i128 - lo as i128) as u128;
            let zipf = Zipf::new(span as f64 + 1.0, 1.0).expect("range has at least one value");
            (0..n)
                .map(|_| {
                    let rank = zipf.sample(&mut rng) as u128;
                    let offset = rank.saturating_sub(1).min(span);
                    (lo as i128 + offset as i128) as i64
                })
                .collect()
        }
    };
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(WeightedGraph::new(weights, edges).expect("generated edges are simple"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, p: f64, lo: i64, hi: i64, seed: u64, distribution: WeightDistribution) -> RandomGraphParams {
        RandomGraphParams { n, p, weight_low: lo, weight_high: hi, seed, distribution }
    }

    #[test]
    fn empty_and_complete() {
        let g = generate_random(&params(0, 0.5, 0, 0, 1, WeightDistribution::Uniform)).unwrap();
        assert_eq!(g.n(), 0);
        let g = generate_random(&params(5, 1.0, 0, 0, 1, WeightDistribution::Constant)).unwrap();
        assert_eq!(g.m(), 10);
        assert!(g.weights().iter().all(|&w| w == 0));
    }

    #[test]
    fn seeded_runs_are_identical() {
        for dist in [WeightDistribution::Uniform, WeightDistribution::Zipf, WeightDistribution::Constant] {
            let a = generate_random(&params(40, 0.3, -8, 8, 99, dist)).unwrap();
            let b = generate_random(&params(40, 0.3, -8, 8, 99, dist)).unwrap();
            assert_eq!(a, b);
            assert!(a.weights().iter().all(|w| (-8..=8).contains(w)));
        }
        let a = generate_random(&params(40, 0.3, -8, 8, 1, WeightDistribution::Uniform)).unwrap();
        let b = generate_random(&params(40, 0.3, -8, 8, 2, WeightDistribution::Uniform)).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn zipf_is_skewed_toward_low() {
        let g = generate_random(&params(2000, 0.0, 0, 16, 5, WeightDistribution::Zipf)).unwrap();
        let zeros = g.weights().iter().filter(|&&w| w == 0).count();
        let sixteens = g.weights().iter().filter(|&&w| w == 16).count();
        assert!(zeros > 5 * sixteens.max(1), "zeros {zeros}, sixteens {sixteens}");
    }

    #[test]
    fn full_range_weights() {
        let g = generate_random(&params(50, 0.1, i64::MIN, i64::MAX, 3, WeightDistribution::Zipf)).unwrap();
        assert_eq!(g.n(), 50);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(generate_random(&params(3, 1.5, 0, 0, 1, WeightDistribution::Uniform)).is_err());
        assert!(generate_random(&params(3, 0.5, 2, 1, 1, WeightDistribution::Uniform)).is_err());
        assert!("pareto".parse::<WeightDistribution>().is_err());
    }
}
