//! Word-packed Boolean matrix engine.
//!
//! This is the only part of the crate that multiplies matrices. Every
//! weighted query reduces to the unweighted tripartite primitives here:
//! [`triangle_exists`], [`triangle_count_assigned`] and
//! [`triangle_count_within`].

mod ledger;
mod matrix;

pub use ledger::{CallKind, CallRecord, CostLedger, LedgerTotals, PivotRecord};
pub use matrix::{BitMatrix, WORD_BITS};

use rayon::prelude::*;

use crate::error::NwtError;
use crate::graph::WeightedGraph;
use crate::slice::TripartiteSlice;
use crate::weight::Weight;
use matrix::words_for;

/// Row tile used for cache blocking and for splitting work across threads.
pub const ROW_TILE: usize = 256;

/// Outcome of a tripartite triangle query, ids in source-graph numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SliceDecision {
    pub witness: Option<(usize, usize, usize)>,
}

impl SliceDecision {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }
}

/// `C = A · B` over the Boolean semiring, recorded in `ledger` as a
/// `(A.rows, A.cols, B.cols)` product call.
///
/// When `B` is wider than `A` is tall, `B` is cut into column blocks of
/// roughly `A.rows` columns (rounded up to whole words) and each block is
/// multiplied on its own.
pub fn bool_product(a: &BitMatrix, b: &BitMatrix, ledger: &mut CostLedger) -> Result<BitMatrix, NwtError> {
    if a.cols() != b.rows() {
        return Err(NwtError::DimensionMismatch {
            left: (a.rows(), a.cols()),
            right: (b.rows(), b.cols()),
        });
    }
    let (c, word_ops) = product_with_ops(a, b);
    if a.rows() > 0 && a.cols() > 0 && b.cols() > 0 {
        ledger.record(CallRecord {
            kind: CallKind::Product,
            x: a.rows(),
            y: a.cols(),
            z: b.cols(),
            word_ops,
        });
    }
    Ok(c)
}

pub(crate) fn product_with_ops(a: &BitMatrix, b: &BitMatrix) -> (BitMatrix, u64) {
    debug_assert_eq!(a.cols(), b.rows());
    let (r, c) = (a.rows(), b.cols());
    if r == 0 || c <= r {
        return row_or_product(a, b);
    }
    let width = words_for(r) * WORD_BITS;
    if width >= c {
        return row_or_product(a, b);
    }
    let mut out = BitMatrix::zeros(r, c);
    let mut ops = 0;
    for start in (0..c).step_by(width) {
        let block = b.column_block(start, width);
        let (partial, block_ops) = row_or_product(a, &block);
        out.put_column_block(start, &partial);
        ops += block_ops;
    }
    (out, ops)
}

/// For each row `i` and each set bit `t` of `A[i]`, OR row `B[t]` into
/// `C[i]`. Rows of `A` are processed in tiles of [`ROW_TILE`]; within a tile
/// the inner dimension is also walked in [`ROW_TILE`] steps so the touched
/// rows of `B` stay in cache.
fn row_or_product(a: &BitMatrix, b: &BitMatrix) -> (BitMatrix, u64) {
    let mut out = BitMatrix::zeros(a.rows(), b.cols());
    let cs = out.stride();
    if cs == 0 || a.rows() == 0 {
        return (out, 0);
    }
    let tile_words = ROW_TILE * cs;
    let run_tile = |(ti, chunk): (usize, &mut [u64])| -> u64 {
        let row0 = ti * ROW_TILE;
        let rows_here = chunk.len() / cs;
        let k = a.cols();
        let mut ops = 0u64;
        for t0 in (0..k).step_by(ROW_TILE) {
            let w0 = t0 / WORD_BITS;
            let w1 = words_for((t0 + ROW_TILE).min(k));
            for r in 0..rows_here {
                let arow = a.row(row0 + r);
                let crow = &mut chunk[r * cs..(r + 1) * cs];
                for (wi, &word) in arow.iter().enumerate().take(w1).skip(w0) {
                    ops += 1;
                    let mut rest = word;
                    while rest != 0 {
                        let t = wi * WORD_BITS + rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        for (dst, src) in crow.iter_mut().zip(b.row(t)) {
                            *dst |= *src;
                        }
                        ops += cs as u64;
                    }
                }
            }
        }
        ops
    };
    let ops = if a.rows() > ROW_TILE {
        out.words_mut().par_chunks_mut(tile_words).enumerate().map(run_tile).sum()
    } else {
        out.words_mut().chunks_mut(tile_words).enumerate().map(run_tile).sum()
    };
    (out, ops)
}

/// Decides whether some `(x, y, z) ∈ X × Y × Z` has all three cross edges.
///
/// Computes `(adj_xy · adj_yz) ∧ adj_xz`; the witness is the first set bit
/// (X ascending, then Z), with `y` the first common neighbor.
pub fn triangle_exists(slice: &TripartiteSlice, ledger: &mut CostLedger) -> SliceDecision {
    let (nx, ny, nz) = slice.shape();
    if nx == 0 || ny == 0 || nz == 0 {
        return SliceDecision { witness: None };
    }
    let (paths, mut ops) = product_with_ops(&slice.adj_xy, &slice.adj_yz);
    let mut hit = None;
    'rows: for xi in 0..nx {
        for (wi, (&p, &e)) in paths.row(xi).iter().zip(slice.adj_xz.row(xi)).enumerate() {
            ops += 1;
            let closed = p & e;
            if closed != 0 {
                hit = Some((xi, wi * WORD_BITS + closed.trailing_zeros() as usize));
                break 'rows;
            }
        }
    }
    let witness = hit.map(|(xi, zi)| {
        let mut column = vec![0u64; slice.adj_xy.stride()];
        for yi in 0..ny {
            if slice.adj_yz.get(yi, zi) {
                column[yi / WORD_BITS] |= 1 << (yi % WORD_BITS);
            }
        }
        let mut yi = None;
        for (wi, (&a, &b)) in slice.adj_xy.row(xi).iter().zip(&column).enumerate() {
            ops += 1;
            if a & b != 0 {
                yi = Some(wi * WORD_BITS + (a & b).trailing_zeros() as usize);
                break;
            }
        }
        let yi = yi.expect("closed path must have a middle vertex");
        (slice.x_ids[xi], slice.y_ids[yi], slice.z_ids[zi])
    });
    ledger.record(CallRecord { kind: CallKind::Exists, x: nx, y: ny, z: nz, word_ops: ops });
    SliceDecision { witness }
}

/// Number of role-assigned triples `(x, y, z) ∈ X × Y × Z` with all three
/// cross edges. A vertex that appears in several roles is counted once per
/// role assignment.
pub fn triangle_count_assigned(slice: &TripartiteSlice, ledger: &mut CostLedger) -> Result<u64, NwtError> {
    let (nx, ny, nz) = slice.shape();
    if (nx as u128) * (ny as u128) * (nz as u128) > u64::MAX as u128 {
        return Err(NwtError::CountOverflow);
    }
    if nx == 0 || ny == 0 || nz == 0 {
        return Ok(0);
    }
    let zy = slice.adj_yz.transpose();
    let count_row = |xi: usize| -> (u64, u64) {
        let xy = slice.adj_xy.row(xi);
        let mut ops = slice.adj_xz.stride() as u64;
        let mut total = 0u64;
        for zi in slice.adj_xz.row_ones(xi) {
            ops += 2 * xy.len() as u64;
            total += xy
                .iter()
                .zip(zy.row(zi))
                .map(|(a, b)| (a & b).count_ones() as u64)
                .sum::<u64>();
        }
        (total, ops)
    };
    let per_row: Vec<(u64, u64)> = if nx > ROW_TILE {
        (0..nx).into_par_iter().map(count_row).collect()
    } else {
        (0..nx).map(count_row).collect()
    };
    let mut total = 0u64;
    let mut ops = 0u64;
    for (c, o) in per_row {
        total = total.checked_add(c).ok_or(NwtError::CountOverflow)?;
        ops += o;
    }
    ledger.record(CallRecord { kind: CallKind::Count, x: nx, y: ny, z: nz, word_ops: ops });
    Ok(total)
}

/// Number of unordered triangles with all three vertices in `set`.
pub fn triangle_count_within<W: Weight>(
    g: &WeightedGraph<W>,
    set: &[usize],
    ledger: &mut CostLedger,
) -> Result<u64, NwtError> {
    let ids = crate::graph::normalize_set(set);
    let slice = TripartiteSlice::from_lists(g, ids.clone(), ids.clone(), ids);
    let assigned = triangle_count_assigned(&slice, ledger)?;
    debug_assert_eq!(assigned % 6, 0);
    Ok(assigned / 6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn scalar_product(a: &BitMatrix, b: &BitMatrix) -> BitMatrix {
        BitMatrix::from_fn(a.rows(), b.cols(), |i, j| (0..a.cols()).any(|t| a.get(i, t) && b.get(t, j)))
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, p: f64) -> BitMatrix {
        BitMatrix::from_fn(rows, cols, |_, _| rng.random_bool(p))
    }

    #[test]
    fn identity_times_b_is_b() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let b = random_matrix(&mut rng, 3, 5, 0.5);
        let mut ledger = CostLedger::new();
        assert_eq!(bool_product(&BitMatrix::identity(3), &b, &mut ledger).unwrap(), b);
    }

    #[test]
    fn zero_times_b_is_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let b = random_matrix(&mut rng, 7, 9, 0.5);
        let mut ledger = CostLedger::new();
        let c = bool_product(&BitMatrix::zeros(4, 7), &b, &mut ledger).unwrap();
        assert!(c.is_zero());
        assert_eq!((c.rows(), c.cols()), (4, 9));
        // every row of A is still scanned once
        assert_eq!(ledger.calls()[0].word_ops, 4);
    }

    #[test]
    fn random_product_matches_triple_loop() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_matrix(&mut rng, 20, 30, 0.2);
        let b = random_matrix(&mut rng, 30, 40, 0.2);
        let mut ledger = CostLedger::new();
        assert_eq!(bool_product(&a, &b, &mut ledger).unwrap(), scalar_product(&a, &b));
        let rec = ledger.calls()[0];
        assert_eq!((rec.x, rec.y, rec.z), (20, 30, 40));
        assert!(rec.word_ops >= 1);
    }

    #[test]
    fn wide_right_factor_is_split_into_blocks() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for &(r, k, c) in &[(3, 10, 300), (70, 90, 400), (1, 1, 129), (65, 300, 1000)] {
            let a = random_matrix(&mut rng, r, k, 0.3);
            let b = random_matrix(&mut rng, k, c, 0.1);
            let mut ledger = CostLedger::new();
            let got = bool_product(&a, &b, &mut ledger).unwrap();
            assert_eq!(got, scalar_product(&a, &b), "shape {r}x{k}x{c}");
            assert!(got.padding_is_clear());
        }
    }

    #[test]
    fn tall_products_use_row_tiles() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_matrix(&mut rng, 600, 300, 0.05);
        let b = random_matrix(&mut rng, 300, 200, 0.05);
        let mut ledger = CostLedger::new();
        assert_eq!(bool_product(&a, &b, &mut ledger).unwrap(), scalar_product(&a, &b));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let mut ledger = CostLedger::new();
        let err = bool_product(&BitMatrix::zeros(2, 3), &BitMatrix::zeros(4, 2), &mut ledger);
        assert!(matches!(err, Err(NwtError::DimensionMismatch { .. })));
        assert!(ledger.calls().is_empty());
    }

    #[test]
    fn product_is_identical_across_thread_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let a = random_matrix(&mut rng, 900, 500, 0.03);
        let b = random_matrix(&mut rng, 500, 700, 0.03);
        let run = |threads| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            pool.install(|| product_with_ops(&a, &b))
        };
        assert_eq!(run(1), run(8));
    }
}
