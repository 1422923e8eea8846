//! Detection parameterized by edge count.
//!
//! Vertices of degree below `delta` are handled by enumerating their
//! neighbor pairs, which costs at most `m · delta` pair checks. Any
//! triangle left over has three high-degree vertices, and there are at most
//! `2m / delta` of those, so the dense algorithm runs on a small induced
//! subgraph.

use crate::bitlinalg::CostLedger;
use crate::detect::detect;
use crate::graph::{induced_subgraph, TriangleWitness, WeightedGraph};
use crate::weight::Weight;

/// Exponent of the default threshold `delta = ⌈m^0.4⌉`.
pub const DEFAULT_DELTA_EXPONENT: f64 = 0.4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSplit {
    /// Vertices with degree `< delta`, ascending.
    pub low: Vec<usize>,
    /// The rest, ascending.
    pub high: Vec<usize>,
}

pub fn default_delta(m: usize) -> usize {
    ((m as f64).powf(DEFAULT_DELTA_EXPONENT).ceil() as usize).max(1)
}

pub fn split_by_degree<W: Weight>(g: &WeightedGraph<W>, delta: usize) -> DegreeSplit {
    assert!(delta >= 1, "degree threshold must be positive");
    let (low, high) = (0..g.n()).partition(|&v| g.degree(v) < delta);
    DegreeSplit { low, high }
}

/// Looks for a `target`-weight triangle through some vertex of `low`.
///
/// For each `v` in `low`, ascending, every neighbor pair `u < w` is checked;
/// the number of pairs examined is added to the ledger.
pub fn enumerate_low_degree<W: Weight>(
    g: &WeightedGraph<W>,
    low: &[usize],
    target: W,
    ledger: &mut CostLedger,
) -> Option<TriangleWitness<W>> {
    let target = target.to_wide();
    let mut pairs = 0u64;
    let mut found = None;
    'outer: for &v in low {
        let nbrs = g.neighbors(v);
        let rest = target.clone() - g.weight(v).to_wide();
        for (i, &u) in nbrs.iter().enumerate() {
            let need = rest.clone() - g.weight(u).to_wide();
            for &w in &nbrs[i + 1..] {
                pairs += 1;
                if g.weight(w).to_wide() == need && g.has_edge(u, w) {
                    found = Some(g.witness(v, u, w));
                    break 'outer;
                }
            }
        }
    }
    ledger.note_enumerated_pairs(pairs);
    found
}

/// Sparse-graph detection. `delta` defaults to [`default_delta`].
pub fn detect_sparse<W: Weight>(
    g: &WeightedGraph<W>,
    target: W,
    delta: Option<usize>,
    ledger: &mut CostLedger,
) -> Option<TriangleWitness<W>> {
    let delta = delta.unwrap_or_else(|| default_delta(g.m())).max(1);
    let split = split_by_degree(g, delta);
    if let Some(w) = enumerate_low_degree(g, &split.low, target, ledger) {
        return Some(w);
    }
    if split.high.len() < 3 {
        return None;
    }
    let sub = induced_subgraph(g, &split.high);
    detect(&sub.graph, target, ledger).map(|w| {
        let o = &sub.original;
        g.witness(o[w.x], o[w.y], o[w.z])
    })
}
