//! Seeded random instances. The same arguments always give the same instance.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::frontend::{BoxInstance, ChordInstance, ExplicitInstance, RectangleInstance};
use crate::graph::VertexId;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Intervals inside `[0, coord_max]` with widths up to a quarter of the range.
pub fn random_intervals<R: Rng>(rng: &mut R, n: usize, coord_max: i64) -> Vec<(i64, i64)> {
    let coord_max = coord_max.max(0);
    (0..n)
        .map(|_| {
            let w = rng.gen_range(0..=coord_max / 4);
            let lo = rng.gen_range(0..=coord_max - w);
            (lo, lo + w)
        })
        .collect()
}

/// Strict order from a random permutation, relating each forward pair with
/// probability `density`.
pub fn random_poset_edges<R: Rng>(rng: &mut R, n: usize, density: f64) -> Vec<(VertexId, VertexId)> {
    let mut perm: Vec<VertexId> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                edges.push((perm[i], perm[j]));
            }
        }
    }
    edges
}

pub fn rectangle_rows<R: Rng>(rng: &mut R, n: usize, coord_max: i64) -> Vec<[i64; 4]> {
    let xs = random_intervals(rng, n, coord_max);
    let ys = random_intervals(rng, n, coord_max);
    xs.into_iter().zip(ys).map(|((a, b), (c, d))| [a, b, c, d]).collect()
}

pub fn box_rows<R: Rng>(rng: &mut R, n: usize, dim: usize, coord_max: i64) -> Vec<Vec<i64>> {
    let axes: Vec<Vec<(i64, i64)>> = (0..dim).map(|_| random_intervals(rng, n, coord_max)).collect();
    (0..n).map(|i| axes.iter().flat_map(|a| [a[i].0, a[i].1]).collect()).collect()
}

/// A uniformly random perfect matching of `0..2n`.
pub fn chord_pairs<R: Rng>(rng: &mut R, n: usize) -> Vec<(i64, i64)> {
    let mut ends: Vec<i64> = (0..2 * n as i64).collect();
    ends.shuffle(rng);
    ends.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect()
}

pub fn random_rectangles(n: usize, seed: u64, coord_max: i64) -> RectangleInstance<i64> {
    RectangleInstance::new(&rectangle_rows(&mut rng(seed), n, coord_max)).expect("generated rectangles are valid")
}

pub fn random_boxes(n: usize, dim: usize, seed: u64, coord_max: i64) -> BoxInstance<i64> {
    BoxInstance::new(dim, &box_rows(&mut rng(seed), n, dim, coord_max)).expect("generated boxes are valid")
}

pub fn random_chords(n: usize, seed: u64) -> ChordInstance<i64> {
    ChordInstance::new(&chord_pairs(&mut rng(seed), n)).expect("generated chords are valid")
}

/// One interval layer over a random poset.
pub fn random_explicit(n: usize, seed: u64, coord_max: i64) -> ExplicitInstance<i64> {
    let mut r = rng(seed);
    let layer = random_intervals(&mut r, n, coord_max);
    let poset = random_poset_edges(&mut r, n, 0.3);
    ExplicitInstance { n, layers: vec![layer], poset: Some(poset), g_edges: None }
}
