use std::collections::BTreeSet;

use frustra_core::spectrum::GrayWalk;
use frustra_core::{f_scan, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn checkpoints_match_a_fresh_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut walk = GrayWalk::all_graphs(7).unwrap();
    let len = walk.len();
    let mut checkpoints: BTreeSet<u64> = BTreeSet::new();
    while checkpoints.len() < 1000 {
        checkpoints.insert(rng.random_range(0..len));
    }
    checkpoints.insert(len - 1);
    let mut checked = 0;
    loop {
        if checkpoints.contains(&walk.step()) {
            let g = walk.graph();
            assert_eq!(walk.f(), f_scan(&g).get(), "step {}", walk.step());
            assert_eq!(walk.e(), g.edge_count());
            checked += 1;
        }
        if !walk.advance() {
            break;
        }
    }
    assert_eq!(checked, checkpoints.len());
}

#[test]
fn walk_from_random_start_over_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..20 {
        let n = rng.random_range(9..=20);
        let mut edges = Vec::new();
        let mut pairs = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if rng.random_bool(0.4) {
                    edges.push((u, v));
                }
                if pairs.len() < 12 && rng.random_bool(0.1) {
                    pairs.push((u, v));
                }
            }
        }
        let start = Graph::from_edges(n, &edges).unwrap();
        let walk = GrayWalk::new(&start, pairs).unwrap();
        let mut count = 0u64;
        let len = walk.len();
        walk.for_each(|rows, f, _| {
            let g = Graph::from_rows(n, rows).unwrap();
            assert_eq!(f, f_scan(&g).get());
            count += 1;
        });
        assert_eq!(count, len);
    }
}
