//! Exact counting of triangles whose vertex weights sum to a target.
//!
//! Triangles are split by the multiset of their weights:
//!
//! * type 1: three distinct weights. The partition loop of
//!   [`detect`](crate::detect::detect) is run to completion with a filter
//!   that discards any triple repeating a weight. Under the strict rank
//!   order each such triangle is seen exactly three times: twice with its
//!   top-ranked weight as pivot and once with the middle one.
//! * type 2: exactly two equal weights `w, w, target - 2w`. Each is seen
//!   twice, once per ordering of the two equal-weight vertices.
//! * type 3: three equal weights `target / 3`, counted directly.

use crate::bitlinalg::{triangle_count_assigned, triangle_count_within, CostLedger};
use crate::detect::{build_frequency_table, check_uniform, partition_for_class, pivot_sets, target_slice};
use crate::error::NwtError;
use crate::graph::WeightedGraph;
use crate::slice::TripartiteSlice;
use crate::weight::Weight;

/// Counting keeps every intermediate sum below `n^3`, which fits in 64 bits
/// for graphs up to this size.
pub const MAX_COUNT_VERTICES: usize = 2_000_000;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CountBreakdown {
    pub type1: u64,
    pub type2: u64,
    pub type3: u64,
    pub total: u64,
    pub raw_type1: u64,
    pub raw_type2: u64,
}

fn check_size<W: Weight>(g: &WeightedGraph<W>) -> Result<(), NwtError> {
    if g.n() > MAX_COUNT_VERTICES {
        return Err(NwtError::TooManyVertices { n: g.n(), limit: MAX_COUNT_VERTICES });
    }
    Ok(())
}

/// Assigned-triple count over `X × Y × Z` with weight sum `target`, where
/// `X` has uniform weight. With `distinct_filter`, only triples whose three
/// weights are pairwise distinct are counted.
pub fn uniform_slice_count<W: Weight>(
    g: &WeightedGraph<W>,
    x: &[usize],
    y: &[usize],
    z: &[usize],
    target: W,
    distinct_filter: bool,
    ledger: &mut CostLedger,
) -> Result<u64, NwtError> {
    check_uniform(g, x)?;
    let Some(&x0) = x.first() else {
        return Ok(0);
    };
    let w = g.weight(x0);
    let slice = target_slice(g, x, y.to_vec(), z.to_vec(), &target.to_wide(), |yv, zv| {
        !distinct_filter || (g.weight(yv) != w && g.weight(zv) != w && g.weight(yv) != g.weight(zv))
    });
    triangle_count_assigned(&slice, ledger)
}

/// Distinct-weight solutions: `(raw, raw / 3)`.
pub fn count_type1<W: Weight>(g: &WeightedGraph<W>, target: W, ledger: &mut CostLedger) -> Result<(u64, u64), NwtError> {
    check_size(g)?;
    let table = build_frequency_table(g);
    let target = target.to_wide();
    let mut part_of = vec![None; table.len()];
    let mut raw = 0u64;
    for pivot_class in 0..table.len() {
        let partition = partition_for_class(&table, pivot_class);
        let pivot = partition.pivot;
        let sets = pivot_sets(g, &table, &partition, &mut part_of, &target, |v| g.weight(v) == pivot);
        let x = &table.classes()[pivot_class].members;
        for (mut y, z) in sets.y.into_iter().zip(sets.z) {
            y.retain(|&v| g.weight(v) != pivot);
            if y.is_empty() || z.is_empty() {
                continue;
            }
            let slice = target_slice(g, x, y, z, &target, |yv, zv| g.weight(yv) != g.weight(zv));
            raw = raw
                .checked_add(triangle_count_assigned(&slice, ledger)?)
                .ok_or(NwtError::CountOverflow)?;
        }
    }
    if !raw.is_multiple_of(3) {
        return Err(NwtError::Multiplicity { which: "type-1", raw, divisor: 3 });
    }
    Ok((raw, raw / 3))
}

/// Solutions with exactly two equal weights: `(raw, raw / 2)`.
pub fn count_type2<W: Weight>(g: &WeightedGraph<W>, target: W, ledger: &mut CostLedger) -> Result<(u64, u64), NwtError> {
    check_size(g)?;
    let table = build_frequency_table(g);
    let target = target.to_wide();
    let mut raw = 0u64;
    for class in table.classes() {
        let w = class.weight.to_wide();
        let third = target.clone() - w.clone() - w.clone();
        if third == w {
            continue;
        }
        let Some(zc) = table.class_of_wide(&third) else {
            continue;
        };
        let xs = &class.members;
        let slice = TripartiteSlice::from_lists(g, xs.clone(), xs.clone(), table.classes()[zc].members.clone());
        raw = raw
            .checked_add(triangle_count_assigned(&slice, ledger)?)
            .ok_or(NwtError::CountOverflow)?;
    }
    if !raw.is_multiple_of(2) {
        return Err(NwtError::Multiplicity { which: "type-2", raw, divisor: 2 });
    }
    Ok((raw, raw / 2))
}

/// Solutions whose three weights are all `target / 3`.
pub fn count_type3<W: Weight>(g: &WeightedGraph<W>, target: W, ledger: &mut CostLedger) -> Result<u64, NwtError> {
    check_size(g)?;
    let table = build_frequency_table(g);
    let Some(third) = W::exact_third(&target.to_wide()) else {
        return Ok(0);
    };
    match table.class_of_wide(&third) {
        Some(c) => triangle_count_within(g, &table.classes()[c].members, ledger),
        None => Ok(0),
    }
}

/// Number of triangles with vertex-weight sum `target`, by type.
pub fn count<W: Weight>(g: &WeightedGraph<W>, target: W, ledger: &mut CostLedger) -> Result<CountBreakdown, NwtError> {
    let (raw_type1, type1) = count_type1(g, target, ledger)?;
    let (raw_type2, type2) = count_type2(g, target, ledger)?;
    let type3 = count_type3(g, target, ledger)?;
    let total = type1
        .checked_add(type2)
        .and_then(|t| t.checked_add(type3))
        .ok_or(NwtError::CountOverflow)?;
    Ok(CountBreakdown { type1, type2, type3, total, raw_type1, raw_type2 })
}
