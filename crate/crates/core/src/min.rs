//! Minimum-weight triangle by bit scaling over exact-target detection.
//!
//! Weights are shifted to `s(v) = wt(v) + w_max ∈ [0, 2 w_max]`. At level
//! `k` every vertex carries `⌊s(v) / 2^k⌋`, and `m_k` is the least level-`k`
//! triangle sum. Since `⌊s / 2^k⌋ = 2⌊s / 2^(k+1)⌋ + bit_k(s)`, every
//! triangle's level-`k` sum is at least `2 m_(k+1)`, and the triangle
//! attaining `m_(k+1)` has level-`k` sum at most `2 m_(k+1) + 3`. So `m_k` is
//! found by trying the four targets `2 m_(k+1) + d`, `d = 0..=3`, in order.
//! At the top level `K` all scaled weights are zero and `m_K = 0`.

use crate::bitlinalg::CostLedger;
use crate::detect::detect;
use crate::error::NwtError;
use crate::graph::{TriangleWitness, WeightedGraph};

/// Largest supported `max |wt(v)|`; keeps shifted weights inside `i64`.
pub const MAX_ABS_WEIGHT: u64 = (1 << 62) - 1;

/// Number of scaling levels for a weight bound: `⌈log2(2 w_max + 1)⌉`.
pub fn scaling_levels(w_max: u64) -> u32 {
    let span = 2 * w_max as u128;
    u128::BITS - span.leading_zeros()
}

/// Upper bound on the exact-target queries issued by [`min_triangle`].
pub fn detect_call_budget(w_max: u64) -> u64 {
    4 * (scaling_levels(w_max) as u64 + 1) + 2
}

pub fn max_abs_weight(g: &WeightedGraph<i64>) -> u64 {
    g.weights().iter().map(|w| w.unsigned_abs()).max().unwrap_or(0)
}

/// The graph with weights `⌊(wt(v) + w_max) / 2^k⌋`, `w_max` taken from `g`.
pub fn scaled_graph(g: &WeightedGraph<i64>, k: u32) -> Result<WeightedGraph<i64>, NwtError> {
    let w_max = checked_bound(g, None)?;
    Ok(scale_with(g, w_max, k))
}

fn scale_with(g: &WeightedGraph<i64>, w_max: u64, k: u32) -> WeightedGraph<i64> {
    let w_max = w_max as i64;
    g.map_weights(|w| if k >= 63 { 0 } else { (w + w_max) >> k })
}

fn checked_bound(g: &WeightedGraph<i64>, bound: Option<u64>) -> Result<u64, NwtError> {
    let actual = max_abs_weight(g);
    let w_max = match bound {
        Some(b) if b < actual => return Err(NwtError::BoundTooSmall { bound: b, actual }),
        Some(b) => b,
        None => actual,
    };
    if w_max > MAX_ABS_WEIGHT {
        return Err(NwtError::WeightTooLarge { w_max: w_max as u128, limit: MAX_ABS_WEIGHT as u128 });
    }
    Ok(w_max)
}

/// Per-level record of a [`min_triangle`] run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelStep {
    pub level: u32,
    /// Minimum level sum (in shifted, scaled units).
    pub level_min: i128,
    /// Candidate offset `d` that succeeded.
    pub offset: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinTriangle {
    pub witness: TriangleWitness<i64>,
    pub sum: i128,
    pub w_max: u64,
    pub levels: u32,
    pub steps: Vec<LevelStep>,
}

/// Minimum-weight triangle of `g`, or `None` if `g` is triangle-free.
pub fn min_triangle(g: &WeightedGraph<i64>, ledger: &mut CostLedger) -> Result<Option<MinTriangle>, NwtError> {
    min_triangle_with_bound(g, None, ledger)
}

/// As [`min_triangle`], scaling from `bound` instead of the actual largest
/// `|wt(v)|` (which `bound` must not undercut).
pub fn min_triangle_with_bound(
    g: &WeightedGraph<i64>,
    bound: Option<u64>,
    ledger: &mut CostLedger,
) -> Result<Option<MinTriangle>, NwtError> {
    let w_max = checked_bound(g, bound)?;
    let levels = scaling_levels(w_max);

    // Level K: every scaled weight is 0, so this is plain triangle detection.
    let Some(top) = detect(&scale_with(g, w_max, levels), 0, ledger) else {
        return Ok(None);
    };
    let mut best = (top.x, top.y, top.z);
    let mut level_min: i128 = 0;
    let mut steps = Vec::with_capacity(levels as usize);
    for level in (0..levels).rev() {
        let scaled = scale_with(g, w_max, level);
        let previous = level_min;
        let mut hit = None;
        for offset in 0..4u8 {
            let candidate = 2 * previous + offset as i128;
            let Ok(target) = i64::try_from(candidate) else {
                break;
            };
            if let Some(w) = detect(&scaled, target, ledger) {
                hit = Some((offset, candidate, w));
                break;
            }
        }
        let Some((offset, candidate, w)) = hit else {
            return Err(NwtError::WindowViolation { level, previous });
        };
        level_min = candidate;
        best = (w.x, w.y, w.z);
        steps.push(LevelStep { level, level_min, offset });
    }
    let witness = g.witness(best.0, best.1, best.2);
    let sum = level_min - 3 * w_max as i128;
    debug_assert_eq!(witness.weight_sum, sum);
    Ok(Some(MinTriangle { witness, sum, w_max, levels, steps }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(weights: Vec<i64>) -> WeightedGraph<i64> {
        let n = weights.len();
        WeightedGraph::new(weights, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn levels() {
        assert_eq!(scaling_levels(0), 0);
        assert_eq!(scaling_levels(1), 2);
        assert_eq!(scaling_levels(2), 3);
        assert_eq!(scaling_levels(4), 4);
        assert_eq!(scaling_levels(8), 5);
        assert_eq!(scaling_levels(1024), 12);
        assert_eq!(scaling_levels(MAX_ABS_WEIGHT), 63);
    }

    #[test]
    fn scaled_weights() {
        let g = WeightedGraph::new(vec![-3i64, 2, 3], []).unwrap();
        assert_eq!(scaled_graph(&g, 1).unwrap().weight(0), 0);
        assert_eq!(scaled_graph(&g, 0).unwrap().weight(1), 5);
        assert_eq!(scaled_graph(&g, 1).unwrap().weight(1), 2);
        assert_eq!(scaled_graph(&g, 3).unwrap().weight(1), 0);

        let zeros = WeightedGraph::new(vec![0i64; 3], []).unwrap();
        assert!(scaled_graph(&zeros, 2).unwrap().weights().iter().all(|&w| w == 0));
    }

    #[test]
    fn k3_and_k4() {
        let mut ledger = CostLedger::new();
        let r = min_triangle(&complete(vec![1, 2, -3]), &mut ledger).unwrap().unwrap();
        assert_eq!(r.sum, 0);
        let r = min_triangle(&complete(vec![-1, -2, 3, 0]), &mut ledger).unwrap().unwrap();
        assert_eq!(r.sum, -3);
        let mut vs = r.witness.vertices();
        vs.sort();
        assert_eq!(vs, [0, 1, 3]);
    }

    #[test]
    fn triangle_free_and_zero_weights() {
        let mut ledger = CostLedger::new();
        let path = WeightedGraph::new(vec![1i64, 2, 3, 4], [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(min_triangle(&path, &mut ledger).unwrap(), None);
        assert_eq!(ledger.detect_calls(), 1);

        let r = min_triangle(&complete(vec![0; 4]), &mut ledger).unwrap().unwrap();
        assert_eq!(r.sum, 0);
        assert_eq!(r.levels, 0);
    }

    #[test]
    fn call_budget_and_window() {
        let g = complete(vec![7, -5, 3, -8, 1, 2]);
        let mut ledger = CostLedger::new();
        let r = min_triangle(&g, &mut ledger).unwrap().unwrap();
        assert_eq!(r.sum, -8 - 5 + 1);
        assert!(ledger.detect_calls() <= detect_call_budget(r.w_max));
        let mut prev = 0;
        for s in &r.steps {
            assert!(2 * prev <= s.level_min && s.level_min <= 2 * prev + 3);
            prev = s.level_min;
        }
    }

    #[test]
    fn bounds() {
        let g = complete(vec![1, 2, -3]);
        let mut ledger = CostLedger::new();
        let r = min_triangle_with_bound(&g, Some(64), &mut ledger).unwrap().unwrap();
        assert_eq!(r.sum, 0);
        assert_eq!(r.levels, 8);
        assert!(matches!(
            min_triangle_with_bound(&g, Some(2), &mut ledger),
            Err(NwtError::BoundTooSmall { .. })
        ));
        let huge = complete(vec![i64::MAX, 0, 0]);
        assert!(matches!(min_triangle(&huge, &mut ledger), Err(NwtError::WeightTooLarge { .. })));
    }
}
