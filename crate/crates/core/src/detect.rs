//! Exact-target node-weighted triangle detection in matrix-multiplication
//! time.
//!
//! For every weight class `w` (the pivot) the weights that rank no higher
//! than `w` are split greedily into parts of total frequency at most
//! `2 f(w)`. For each part `P` the search is restricted to
//!
//! * `X` = vertices of weight `w`,
//! * `Y` = vertices whose weight lies in `P`,
//! * `Z` = vertices `z` with `target - w - wt(z)` in `P`,
//!
//! and because `X` carries a single weight, keeping only the `Y`–`Z` edges
//! whose weights complete the target turns the question into plain
//! tripartite triangle detection. Any solution is caught while its
//! highest-ranked vertex is the pivot and a second vertex sits in `Y`.

use std::collections::HashMap;

use crate::bitlinalg::{triangle_exists, CostLedger, PivotRecord, SliceDecision};
use crate::error::NwtError;
use crate::graph::{TriangleWitness, WeightedGraph};
use crate::slice::TripartiteSlice;
use crate::weight::Weight;

/// One distinct weight and the vertices carrying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightClass<W> {
    pub weight: W,
    /// Ascending vertex ids.
    pub members: Vec<usize>,
}

impl<W> WeightClass<W> {
    pub fn frequency(&self) -> usize {
        self.members.len()
    }
}

/// The distinct weights of a graph with their frequencies.
///
/// Classes are stored in ascending weight order. The rank order used for
/// partitioning is ascending `(frequency, weight)`, which is strict, so two
/// classes never tie.
#[derive(Debug, Clone)]
pub struct FrequencyTable<W: Weight> {
    classes: Vec<WeightClass<W>>,
    /// Class indices sorted by rank.
    by_rank: Vec<usize>,
    /// `rank[class]` = position of `class` in `by_rank`.
    rank: Vec<usize>,
    lookup: HashMap<W::Wide, usize>,
}

pub fn build_frequency_table<W: Weight>(g: &WeightedGraph<W>) -> FrequencyTable<W> {
    let mut ids: Vec<usize> = (0..g.n()).collect();
    ids.sort_by_key(|&v| (g.weight(v), v));
    let mut classes: Vec<WeightClass<W>> = Vec::new();
    for v in ids {
        let w = g.weight(v);
        match classes.last_mut() {
            Some(c) if c.weight == w => c.members.push(v),
            _ => classes.push(WeightClass { weight: w, members: vec![v] }),
        }
    }
    let mut by_rank: Vec<usize> = (0..classes.len()).collect();
    by_rank.sort_by_key(|&c| (classes[c].frequency(), classes[c].weight));
    let mut rank = vec![0; classes.len()];
    for (r, &c) in by_rank.iter().enumerate() {
        rank[c] = r;
    }
    let lookup = classes.iter().enumerate().map(|(i, c)| (c.weight.to_wide(), i)).collect();
    FrequencyTable { classes, by_rank, rank, lookup }
}

impl<W: Weight> FrequencyTable<W> {
    pub fn classes(&self) -> &[WeightClass<W>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, weight: W) -> Option<usize> {
        self.lookup.get(&weight.to_wide()).copied()
    }

    pub(crate) fn class_of_wide(&self, weight: &W::Wide) -> Option<usize> {
        self.lookup.get(weight).copied()
    }

    pub fn frequency(&self, weight: W) -> usize {
        self.class_of(weight).map_or(0, |c| self.classes[c].frequency())
    }

    /// Class indices in rank order.
    pub fn rank_order(&self) -> &[usize] {
        &self.by_rank
    }

    pub fn rank(&self, class: usize) -> usize {
        self.rank[class]
    }
}

/// One part of a [`WeightPartition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Part {
    /// Class indices, in scan (rank) order.
    pub classes: Vec<usize>,
    pub frequency: usize,
}

/// Greedy partition of the classes ranked at or below a pivot into parts of
/// frequency at most `cap = 2 f(pivot)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPartition<W> {
    pub pivot: W,
    pub pivot_class: usize,
    pub pivot_frequency: usize,
    pub cap: usize,
    pub parts: Vec<Part>,
}

impl<W: Weight> WeightPartition<W> {
    /// The weights of each part, in scan order.
    pub fn part_weights(&self, table: &FrequencyTable<W>) -> Vec<Vec<W>> {
        self.parts
            .iter()
            .map(|p| p.classes.iter().map(|&c| table.classes[c].weight).collect())
            .collect()
    }
}

/// Greedy partition for `pivot`, or `None` when no vertex has that weight.
pub fn greedy_partition<W: Weight>(table: &FrequencyTable<W>, pivot: W) -> Option<WeightPartition<W>> {
    table.class_of(pivot).map(|c| partition_for_class(table, c))
}

pub(crate) fn partition_for_class<W: Weight>(table: &FrequencyTable<W>, pivot_class: usize) -> WeightPartition<W> {
    let pivot_frequency = table.classes[pivot_class].frequency();
    let cap = 2 * pivot_frequency;
    let mut parts = Vec::new();
    let mut current = Part { classes: Vec::new(), frequency: 0 };
    for &c in &table.by_rank[..=table.rank[pivot_class]] {
        let f = table.classes[c].frequency();
        if current.frequency + f > cap && !current.classes.is_empty() {
            parts.push(std::mem::replace(&mut current, Part { classes: Vec::new(), frequency: 0 }));
        }
        current.classes.push(c);
        current.frequency += f;
    }
    if !current.classes.is_empty() {
        parts.push(current);
    }
    WeightPartition {
        pivot: table.classes[pivot_class].weight,
        pivot_class,
        pivot_frequency,
        cap,
        parts,
    }
}

/// Checks that every vertex of `x` has the weight of `x[0]`.
pub(crate) fn check_uniform<W: Weight>(g: &WeightedGraph<W>, x: &[usize]) -> Result<(), NwtError> {
    if let Some(&first) = x.first() {
        let w = g.weight(first);
        if let Some(&vertex) = x.iter().find(|&&v| g.weight(v) != w) {
            return Err(NwtError::NonUniformPart { first, vertex });
        }
    }
    Ok(())
}

/// Slice over `X × Y × Z` keeping only `Y`–`Z` edges whose weights complete
/// `target` together with the uniform weight of `X`.
pub(crate) fn target_slice<W: Weight>(
    g: &WeightedGraph<W>,
    x: &[usize],
    y: Vec<usize>,
    z: Vec<usize>,
    target: &W::Wide,
    mut extra: impl FnMut(usize, usize) -> bool,
) -> TripartiteSlice {
    let Some(&x0) = x.first() else {
        return TripartiteSlice::from_lists(g, Vec::new(), y, z);
    };
    let need = target.clone() - g.weight(x0).to_wide();
    TripartiteSlice::from_lists_filtered(g, x.to_vec(), y, z, |yv, zv| {
        g.weight(yv).to_wide() + g.weight(zv).to_wide() == need && extra(yv, zv)
    })
}

/// Searches `X × Y × Z` for a triangle of weight exactly `target`, where
/// every vertex of `X` has the same weight.
pub fn uniform_slice_detect<W: Weight>(
    g: &WeightedGraph<W>,
    x: &[usize],
    y: &[usize],
    z: &[usize],
    target: W,
    ledger: &mut CostLedger,
) -> Result<SliceDecision, NwtError> {
    check_uniform(g, x)?;
    let slice = target_slice(g, x, y.to_vec(), z.to_vec(), &target.to_wide(), |_, _| true);
    Ok(triangle_exists(&slice, ledger))
}

/// Vertices of each part of `partition`, and for each part the bucket of
/// `z` whose complement weight `target - w - wt(z)` falls in that part.
pub(crate) struct PivotSets {
    pub y: Vec<Vec<usize>>,
    pub z: Vec<Vec<usize>>,
}

pub(crate) fn pivot_sets<W: Weight>(
    g: &WeightedGraph<W>,
    table: &FrequencyTable<W>,
    partition: &WeightPartition<W>,
    part_of: &mut [Option<usize>],
    target: &W::Wide,
    mut skip_z: impl FnMut(usize) -> bool,
) -> PivotSets {
    for (pi, part) in partition.parts.iter().enumerate() {
        for &c in &part.classes {
            part_of[c] = Some(pi);
        }
    }
    let y = partition
        .parts
        .iter()
        .map(|part| {
            let mut ids: Vec<usize> = part.classes.iter().flat_map(|&c| table.classes[c].members.iter().copied()).collect();
            ids.sort_unstable();
            ids
        })
        .collect();
    let mut z = vec![Vec::new(); partition.parts.len()];
    let rest = target.clone() - partition.pivot.to_wide();
    for v in 0..g.n() {
        if skip_z(v) {
            continue;
        }
        let complement = rest.clone() - g.weight(v).to_wide();
        if let Some(pi) = table.class_of_wide(&complement).and_then(|c| part_of[c]) {
            z[pi].push(v);
        }
    }
    for part in &partition.parts {
        for &c in &part.classes {
            part_of[c] = None;
        }
    }
    PivotSets { y, z }
}

/// Finds a triangle whose vertex weights sum exactly to `target`.
///
/// Pivots are visited in ascending weight order and parts in partition
/// order; the first triangle found is returned.
pub fn detect<W: Weight>(g: &WeightedGraph<W>, target: W, ledger: &mut CostLedger) -> Option<TriangleWitness<W>> {
    ledger.note_detect_call();
    let table = build_frequency_table(g);
    let target = target.to_wide();
    let mut part_of = vec![None; table.len()];
    for pivot_class in 0..table.len() {
        let partition = partition_for_class(&table, pivot_class);
        let sets = pivot_sets(g, &table, &partition, &mut part_of, &target, |_| false);
        ledger.record_pivot(PivotRecord {
            n: g.n(),
            pivot_frequency: partition.pivot_frequency,
            part_frequencies: partition.parts.iter().map(|p| p.frequency).collect(),
            z_total: sets.z.iter().map(Vec::len).sum(),
        });
        let x = &table.classes[pivot_class].members;
        for (y, z) in sets.y.into_iter().zip(sets.z) {
            if z.is_empty() {
                continue;
            }
            let slice = target_slice(g, x, y, z, &target, |_, _| true);
            if let Some((a, b, c)) = triangle_exists(&slice, ledger).witness {
                return Some(g.witness(a, b, c));
            }
        }
    }
    None
}
