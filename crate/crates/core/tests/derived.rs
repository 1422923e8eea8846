//! Seeded instances checked against brute-force enumeration.

use nwt_core::bitlinalg::{triangle_count_assigned, triangle_count_within, triangle_exists};
use nwt_core::count::{count_type1, count_type2, count_type3, uniform_slice_count};
use nwt_core::detect::uniform_slice_detect;
use nwt_core::oracle::{brute_count, brute_triangle_count};
use nwt_core::sparse::{default_delta, enumerate_low_degree, split_by_degree};
use nwt_core::{
    count, detect, generate_random, induced_subgraph, CostLedger, RandomGraphParams, TripartiteSlice,
    WeightDistribution, WeightedGraph,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random(n: usize, p: f64, lo: i64, hi: i64, seed: u64) -> WeightedGraph<i64> {
    generate_random(&RandomGraphParams {
        n,
        p,
        weight_low: lo,
        weight_high: hi,
        seed,
        distribution: WeightDistribution::Uniform,
    })
    .unwrap()
}

#[test]
fn census_of_seed_7_matches_enumeration() {
    let g = random(50, 0.3, -8, 8, 7);
    let mut ledger = CostLedger::new();
    let mut total = 0;
    for target in -24..=24 {
        let got = count(&g, target, &mut ledger).unwrap();
        let want = brute_count(&g, target);
        assert_eq!(got.total, want.total, "target {target}");
        assert_eq!(detect(&g, target, &mut ledger).is_some(), want.total > 0);
        total += got.total;
    }
    assert_eq!(total, brute_triangle_count(&g));
}

#[test]
fn random_slices_match_triple_loop() {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    for seed in 0..20 {
        let g = random(40, 0.3, 0, 0, seed);
        let pick = |rng: &mut ChaCha8Rng| -> Vec<usize> { (0..40).filter(|_| rng.random_bool(0.5)).collect() };
        let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let mut expected = 0u64;
        for &a in &x {
            for &b in &y {
                for &c in &z {
                    if g.is_triangle(a, b, c) {
                        expected += 1;
                    }
                }
            }
        }
        let slice = TripartiteSlice::from_lists(&g, x, y, z);
        let mut ledger = CostLedger::new();
        let d = triangle_exists(&slice, &mut ledger);
        assert_eq!(d.found(), expected > 0);
        if let Some((a, b, c)) = d.witness {
            assert!(g.is_triangle(a, b, c));
        }
        assert_eq!(triangle_count_assigned(&slice, &mut ledger).unwrap(), expected);
    }
}

#[test]
fn count_within_random_half() {
    for seed in 0..10 {
        let g = random(40, 0.4, 0, 0, 100 + seed);
        let mut ids: Vec<usize> = (0..40).collect();
        ids.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        ids.truncate(20);
        let sub = induced_subgraph(&g, &ids);
        let mut ledger = CostLedger::new();
        assert_eq!(triangle_count_within(&g, &ids, &mut ledger).unwrap(), brute_triangle_count(&sub.graph));
    }
}

#[test]
fn uniform_slices_match_filtered_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for seed in 0..30 {
        let g = random(40, 0.35, -4, 4, 200 + seed);
        let w = g.weight(0);
        let x: Vec<usize> = (0..40).filter(|&v| g.weight(v) == w).collect();
        let y: Vec<usize> = (0..40).filter(|_| rng.random_bool(0.5)).collect();
        let z: Vec<usize> = (0..40).filter(|_| rng.random_bool(0.5)).collect();
        let target = rng.random_range(-8..=8);
        let mut plain = 0u64;
        let mut distinct = 0u64;
        for &a in &x {
            for &b in &y {
                for &c in &z {
                    if g.is_triangle(a, b, c) && g.weight_sum(a, b, c) == target as i128 {
                        plain += 1;
                        let (wa, wb, wc) = (g.weight(a), g.weight(b), g.weight(c));
                        if wa != wb && wb != wc && wa != wc {
                            distinct += 1;
                        }
                    }
                }
            }
        }
        let mut ledger = CostLedger::new();
        let d = uniform_slice_detect(&g, &x, &y, &z, target, &mut ledger).unwrap();
        assert_eq!(d.found(), plain > 0, "seed {seed}");
        assert_eq!(uniform_slice_count(&g, &x, &y, &z, target, false, &mut ledger).unwrap(), plain);
        assert_eq!(uniform_slice_count(&g, &x, &y, &z, target, true, &mut ledger).unwrap(), distinct);
    }
}

#[test]
fn typed_counts_match_classification() {
    for seed in 0..20 {
        let g = random(50, 0.3, -5, 5, 300 + seed);
        for target in [-3, 0, 2] {
            let want = brute_count(&g, target);
            let mut ledger = CostLedger::new();
            assert_eq!(count_type1(&g, target, &mut ledger).unwrap().1, want.type1);
            assert_eq!(count_type2(&g, target, &mut ledger).unwrap().1, want.type2);
            assert_eq!(count_type3(&g, target, &mut ledger).unwrap(), want.type3);
        }
    }
}

#[test]
fn all_zero_weights_type3_is_unweighted_count() {
    let g = random(50, 0.3, 0, 0, 5);
    let mut ledger = CostLedger::new();
    assert_eq!(count_type3(&g, 0, &mut ledger).unwrap(), brute_triangle_count(&g));
}

#[test]
fn degree_split_bound() {
    let g = random(50, 0.2, 0, 0, 17);
    let delta = (g.m() as f64).powf(0.4).ceil() as usize;
    assert_eq!(delta, default_delta(g.m()));
    let split = split_by_degree(&g, delta);
    assert!(split.high.len() * delta <= 2 * g.m());
    assert_eq!(split.low.len() + split.high.len(), 50);
    for &v in &split.low {
        assert!(g.degree(v) < delta);
    }
}

#[test]
fn low_and_high_halves_cover_every_triangle() {
    for seed in 0..20 {
        let g = random(60, 0.12, -3, 3, 400 + seed);
        for delta in [2, 5, 9] {
            let split = split_by_degree(&g, delta);
            let high = induced_subgraph(&g, &split.high);
            for target in -4..=4 {
                let mut ledger = CostLedger::new();
                let low_hit = enumerate_low_degree(&g, &split.low, target, &mut ledger).is_some();
                let high_hit = detect(&high.graph, target, &mut ledger).is_some();
                assert_eq!(low_hit || high_hit, brute_count(&g, target).total > 0);
            }
        }
    }
}
