/// Which primitive produced a [`CallRecord`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CallKind {
    Product,
    Exists,
    Count,
}

/// One matrix-level call: the slice shape `(|X|, |Y|, |Z|)` and the number
/// of word operations (OR / AND / popcount) it spent.
///
/// For a bare product `A (x × y) · B (y × z)` the shape is `(x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CallRecord {
    pub kind: CallKind,
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub word_ops: u64,
}

impl CallRecord {
    /// `|X||Y| + |Y||Z| + |X||Z|`, the number of adjacency entries the call
    /// touches.
    pub fn entries(&self) -> u128 {
        let (x, y, z) = (self.x as u128, self.y as u128, self.z as u128);
        x * y + y * z + x * z
    }
}

/// Shape of one outer-loop iteration of the partition algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotRecord {
    /// Vertex count of the graph being searched.
    pub n: usize,
    pub pivot_frequency: usize,
    /// Frequency sum of each part, in partition order.
    pub part_frequencies: Vec<usize>,
    /// Total size of all Z buckets for this pivot.
    pub z_total: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LedgerTotals {
    pub calls: u64,
    pub word_ops: u64,
    /// Sum of [`CallRecord::entries`] over slice calls (exists and count).
    pub slice_entries: u128,
}

/// Running record of the matrix work done on behalf of one or more
/// top-level queries.
#[derive(Debug, Clone, Default)]
pub struct CostLedger {
    calls: Vec<CallRecord>,
    pivots: Vec<PivotRecord>,
    totals: LedgerTotals,
    detect_calls: u64,
    enumerated_pairs: u64,
}

impl CostLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, rec: CallRecord) {
        self.totals.calls += 1;
        self.totals.word_ops += rec.word_ops;
        if rec.kind != CallKind::Product {
            self.totals.slice_entries += rec.entries();
        }
        self.calls.push(rec);
    }

    pub(crate) fn record_pivot(&mut self, rec: PivotRecord) {
        self.pivots.push(rec);
    }

    pub(crate) fn note_detect_call(&mut self) {
        self.detect_calls += 1;
    }

    pub(crate) fn note_enumerated_pairs(&mut self, pairs: u64) {
        self.enumerated_pairs += pairs;
    }

    pub fn calls(&self) -> &[CallRecord] {
        &self.calls
    }

    pub fn pivots(&self) -> &[PivotRecord] {
        &self.pivots
    }

    pub fn totals(&self) -> LedgerTotals {
        self.totals
    }

    /// Number of full exact-target detection queries issued.
    pub fn detect_calls(&self) -> u64 {
        self.detect_calls
    }

    /// Neighbor pairs examined by low-degree enumeration.
    pub fn enumerated_pairs(&self) -> u64 {
        self.enumerated_pairs
    }

    /// Recomputes the totals from the individual records.
    pub fn recomputed_totals(&self) -> LedgerTotals {
        let mut t = LedgerTotals::default();
        for rec in &self.calls {
            t.calls += 1;
            t.word_ops += rec.word_ops;
            if rec.kind != CallKind::Product {
                t.slice_entries += rec.entries();
            }
        }
        t
    }
}
