//! Brute-force reference answers.
//!
//! Plain enumeration of every triangle `x < y < z` through the sorted
//! neighbor lists. Nothing here touches the matrix engine or the weight
//! partition, so agreement with those paths is a meaningful check.

use crate::count::CountBreakdown;
use crate::graph::{TriangleWitness, WeightedGraph};
use crate::weight::Weight;

/// Calls `visit(x, y, z)` for every triangle with `x < y < z`, in
/// lexicographic order, until it returns `false`.
pub fn for_each_triangle<W: Weight>(g: &WeightedGraph<W>, mut visit: impl FnMut(usize, usize, usize) -> bool) {
    for x in 0..g.n() {
        for &y in g.neighbors(x).iter().filter(|&&y| y > x) {
            for &z in g.neighbors(y).iter().filter(|&&z| z > y) {
                if g.has_edge(x, z) && !visit(x, y, z) {
                    return;
                }
            }
        }
    }
}

pub fn brute_detect<W: Weight>(g: &WeightedGraph<W>, target: W) -> Option<TriangleWitness<W>> {
    let target = target.to_wide();
    let mut found = None;
    for_each_triangle(g, |x, y, z| {
        if g.weight_sum(x, y, z) == target {
            found = Some(g.witness(x, y, z));
            false
        } else {
            true
        }
    });
    found
}

/// Counts target-weight triangles by how many of their weights coincide.
/// The `raw_*` fields are left at zero.
pub fn brute_count<W: Weight>(g: &WeightedGraph<W>, target: W) -> CountBreakdown {
    let target = target.to_wide();
    let mut out = CountBreakdown::default();
    for_each_triangle(g, |x, y, z| {
        if g.weight_sum(x, y, z) == target {
            let (a, b, c) = (g.weight(x), g.weight(y), g.weight(z));
            match (a == b, b == c, a == c) {
                (true, true, _) => out.type3 += 1,
                (false, false, false) => out.type1 += 1,
                _ => out.type2 += 1,
            }
            out.total += 1;
        }
        true
    });
    out
}

/// Minimum-weight triangle; ties go to the lexicographically first.
pub fn brute_min<W: Weight>(g: &WeightedGraph<W>) -> Option<TriangleWitness<W>> {
    let mut best: Option<TriangleWitness<W>> = None;
    for_each_triangle(g, |x, y, z| {
        let s = g.weight_sum(x, y, z);
        if best.as_ref().is_none_or(|b| s < b.weight_sum) {
            best = Some(g.witness(x, y, z));
        }
        true
    });
    best
}

/// Number of unweighted triangles.
pub fn brute_triangle_count<W: Weight>(g: &WeightedGraph<W>) -> u64 {
    let mut n = 0;
    for_each_triangle(g, |_, _, _| {
        n += 1;
        true
    });
    n
}
