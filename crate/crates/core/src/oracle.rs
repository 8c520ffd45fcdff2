//! Exhaustive baselines for small graphs: `α`, `β`, and `φ(G, H)`.

use num_rational::Ratio;

use crate::cover::CliqueCover;
use crate::error::{Error, Result};
use crate::graph::{AdjacencyGraph, VertexSet};
use crate::interval::IntervalSupergraph;
use crate::scalar::Coord;

/// Size caps for exhaustive work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimit {
    pub alpha_max_n: usize,
    pub beta_max_n: usize,
    pub phi_max_n: usize,
    /// Up to this size `φ` is taken over every clique of `H`, above it over
    /// maximal cliques only.
    pub phi_all_cliques_max_n: usize,
}

impl Default for OracleLimit {
    fn default() -> Self {
        OracleLimit { alpha_max_n: 20, beta_max_n: 18, phi_max_n: 14, phi_all_cliques_max_n: 10 }
    }
}

fn masks(g: &AdjacencyGraph) -> Vec<u64> {
    (0..g.n()).map(|u| g.neighbors(u).fold(0u64, |m, v| m | 1 << v)).collect()
}

fn to_set(mask: u64) -> VertexSet {
    (0..64).filter(|&b| mask & (1 << b) != 0).collect()
}

/// Maximum independent set with the default cap.
pub fn exact_alpha(g: &AdjacencyGraph) -> Result<(usize, VertexSet)> {
    exact_alpha_with(g, OracleLimit::default())
}

pub fn exact_alpha_with(g: &AdjacencyGraph, limit: OracleLimit) -> Result<(usize, VertexSet)> {
    if g.n() > limit.alpha_max_n.min(64) {
        return Err(Error::OracleCap { n: g.n(), cap: limit.alpha_max_n });
    }
    let nbr = masks(g);
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best = 0u64;
    mis_branch(&nbr, all, 0, &mut best);
    Ok((best.count_ones() as usize, to_set(best)))
}

fn mis_branch(nbr: &[u64], cand: u64, cur: u64, best: &mut u64) {
    if cand == 0 {
        if cur.count_ones() > best.count_ones() {
            *best = cur;
        }
        return;
    }
    if cur.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let bit = 1u64 << v;
    mis_branch(nbr, cand & !bit & !nbr[v], cur | bit, best);
    mis_branch(nbr, cand & !bit, cur, best);
}

/// Minimum clique partition (proper coloring of the complement) with the
/// default cap.
pub fn exact_beta(g: &AdjacencyGraph) -> Result<(usize, CliqueCover)> {
    exact_beta_with(g, OracleLimit::default())
}

pub fn exact_beta_with(g: &AdjacencyGraph, limit: OracleLimit) -> Result<(usize, CliqueCover)> {
    let n = g.n();
    if n > limit.beta_max_n.min(64) {
        return Err(Error::OracleCap { n, cap: limit.beta_max_n });
    }
    if n == 0 {
        return Ok((0, CliqueCover::default()));
    }
    let nbr = masks(g);
    // few neighbours in G = many in the complement: place those first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (nbr[v].count_ones(), v));

    // first-fit gives the initial upper bound
    let mut best: Vec<u64> = Vec::new();
    for &v in &order {
        match best.iter_mut().find(|p| **p & !nbr[v] == 0) {
            Some(p) => *p |= 1 << v,
            None => best.push(1 << v),
        }
    }
    let (lower, _) = exact_alpha_with(g, OracleLimit { alpha_max_n: 64, ..limit })?;
    let mut parts = Vec::with_capacity(n);
    if best.len() > lower {
        color_branch(&nbr, &order, 0, &mut parts, &mut best, lower);
    }
    let cover = CliqueCover::new(best.into_iter().map(to_set).collect());
    Ok((cover.len(), cover))
}

fn color_branch(nbr: &[u64], order: &[usize], i: usize, parts: &mut Vec<u64>, best: &mut Vec<u64>, lower: usize) {
    if best.len() == lower {
        return;
    }
    if i == order.len() {
        if parts.len() < best.len() {
            *best = parts.clone();
        }
        return;
    }
    let v = order[i];
    for p in 0..parts.len() {
        if parts[p] & !nbr[v] == 0 {
            parts[p] |= 1 << v;
            color_branch(nbr, order, i + 1, parts, best, lower);
            parts[p] &= !(1 << v);
        }
    }
    if parts.len() + 1 < best.len() {
        parts.push(1 << v);
        color_branch(nbr, order, i + 1, parts, best, lower);
        parts.pop();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiMode {
    AllCliques,
    MaximalCliques,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiValue {
    pub ratio: Ratio<usize>,
    /// A clique `W` of `H` attaining the ratio.
    pub witness: VertexSet,
    pub mode: PhiMode,
}

/// `max β(G[W]) / α(G[W])` over cliques `W` of `h`.
pub fn exact_phi_small<T: Coord>(g: &AdjacencyGraph, h: &IntervalSupergraph<T>) -> Result<PhiValue> {
    exact_phi_with(g, h, OracleLimit::default())
}

pub fn exact_phi_with<T: Coord>(g: &AdjacencyGraph, h: &IntervalSupergraph<T>, limit: OracleLimit) -> Result<PhiValue> {
    let n = g.n();
    if n > limit.phi_max_n {
        return Err(Error::OracleCap { n, cap: limit.phi_max_n });
    }
    if h.n() != n {
        return Err(Error::LayerSize { layer: 1, got: h.n(), expected: n });
    }
    let (mode, cliques) = if n <= limit.phi_all_cliques_max_n {
        let all: Vec<VertexSet> = (1u64..1 << n)
            .map(to_set)
            .filter(|w| w.iter().all(|u| w.iter().all(|v| u == v || h.intersects(u, v))))
            .collect();
        (PhiMode::AllCliques, all)
    } else {
        (PhiMode::MaximalCliques, maximal_cliques(h))
    };

    let mut best: Option<(Ratio<usize>, VertexSet)> = None;
    for w in cliques {
        let sub = g.induced_subgraph(&w)?.graph;
        let (a, _) = exact_alpha_with(&sub, limit)?;
        let (b, _) = exact_beta_with(&sub, limit)?;
        let r = Ratio::new(b, a);
        if best.as_ref().is_none_or(|(x, _)| r > *x) {
            best = Some((r, w));
        }
    }
    let (ratio, witness) = best.unwrap_or((Ratio::from_integer(1), VertexSet::empty()));
    Ok(PhiValue { ratio, witness, mode })
}

/// Maximal cliques of an interval graph: each is the set of intervals
/// containing some left endpoint.
pub fn maximal_cliques<T: Coord>(h: &IntervalSupergraph<T>) -> Vec<VertexSet> {
    let mut cands: Vec<VertexSet> = (0..h.n())
        .map(|v| {
            let p = h.interval(v).lo();
            (0..h.n()).filter(|&u| h.interval(u).contains_point(p)).collect()
        })
        .collect();
    cands.sort();
    cands.dedup();
    let keep: Vec<bool> = cands
        .iter()
        .map(|c| !cands.iter().any(|d| d.len() > c.len() && c.iter().all(|v| d.contains(v))))
        .collect();
    cands.into_iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect()
}
