#![allow(dead_code)]

use cliquecover::{AdjacencyGraph, VertexSet};

/// Independence number of the interval graph on `iv` by the textbook
/// scheduling DP over right endpoints (no greedy, no library code).
pub fn interval_alpha_dp(iv: &[(i64, i64)]) -> usize {
    let mut v: Vec<(i64, i64)> = iv.to_vec();
    v.sort_by_key(|&(lo, hi)| (hi, lo));
    let mut dp = vec![0usize; v.len() + 1];
    for i in 0..v.len() {
        // last interval ending strictly before v[i] starts
        let p = v[..i].iter().rposition(|&(_, hi)| hi < v[i].0).map_or(0, |j| j + 1);
        dp[i + 1] = dp[i].max(dp[p] + 1);
    }
    dp[v.len()]
}

pub fn closed_overlap(a: (i64, i64), b: (i64, i64)) -> bool {
    a.0.max(b.0) <= a.1.min(b.1)
}

pub fn rect_overlap(a: &[i64; 4], b: &[i64; 4]) -> bool {
    closed_overlap((a[0], a[1]), (b[0], b[1])) && closed_overlap((a[2], a[3]), (b[2], b[3]))
}

pub fn box_overlap(a: &[i64], b: &[i64]) -> bool {
    a.chunks(2).zip(b.chunks(2)).all(|(x, y)| closed_overlap((x[0], x[1]), (y[0], y[1])))
}

/// Two chords cross iff exactly one endpoint of one lies strictly between the
/// endpoints of the other.
pub fn chords_cross(x: (i64, i64), y: (i64, i64)) -> bool {
    let (a, b) = (x.0.min(x.1), x.0.max(x.1));
    let inside = |p: i64| a < p && p < b;
    inside(y.0) != inside(y.1)
}

pub fn graph_of<F: Fn(usize, usize) -> bool>(n: usize, f: F) -> AdjacencyGraph {
    AdjacencyGraph::from_predicate(n, f)
}

pub fn set(ids: impl IntoIterator<Item = usize>) -> VertexSet {
    ids.into_iter().collect()
}
