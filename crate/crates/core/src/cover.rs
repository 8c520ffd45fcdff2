//! The separator recursion, its instantiations for one or several interval
//! layers, and certificate assembly and verification.
//!
//! Every solve returns a [`CoverCertificate`]: a clique partition `C`, an
//! independent set `I`, and a bound `2^(t-1)·φ·|I|·∏(log₂ α(H_i) + 1)` that
//! `|C|` never exceeds. Since `|I| ≤ α(G) ≤ β(G)`, the ratio between the
//! bound factor and the optimum is certified without knowing `β(G)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Adjacency, AdjacencyGraph, VertexId, VertexSet};
use crate::interval::IntervalSupergraph;
use crate::poset::Poset;
use crate::scalar::{BoundReal, Coord};

/// A list of cliques; each part is a sorted vertex set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliqueCover {
    parts: Vec<VertexSet>,
}

impl CliqueCover {
    pub fn new(parts: Vec<VertexSet>) -> Self {
        CliqueCover { parts }
    }

    pub fn from_parts(parts: Vec<Vec<VertexId>>) -> Self {
        CliqueCover { parts: parts.into_iter().map(VertexSet::from_iter_dedup).collect() }
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn covered(&self) -> VertexSet {
        self.parts.iter().flat_map(|p| p.iter()).collect()
    }
}

/// Output of a base solver on one clique of the current interval layer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BaseSolution {
    pub cover: Vec<Vec<VertexId>>,
    pub independent: Vec<VertexId>,
}

/// Solves `G[w]` for vertex sets `w` that are cliques in the interval
/// supergraph. The cover parts must be cliques of `G` and the independent
/// set independent in `G`.
///
/// `declared_phi` is the promised ratio `|cover| ≤ φ·|independent|`. A
/// solver that promises nothing returns `None`; the certificate then uses
/// the worst ratio actually observed, which the recursion's bound still
/// respects.
pub trait BaseSolver {
    fn solve(&mut self, w: &[VertexId]) -> Result<BaseSolution>;

    fn declared_phi(&self) -> Option<f64> {
        None
    }
}

/// Greedy piercing on an interval layer. Exact, so `φ = 1`.
pub struct PierceBase<'a, T>(pub &'a IntervalSupergraph<T>);

impl<T: Coord> BaseSolver for PierceBase<'_, T> {
    fn solve(&mut self, w: &[VertexId]) -> Result<BaseSolution> {
        let (cover, independent) = self.0.pierce_ordered(&self.0.to_pi_order(w));
        Ok(BaseSolution { cover, independent })
    }

    fn declared_phi(&self) -> Option<f64> {
        Some(1.0)
    }
}

/// Antichain partition of a poset. Exact on incomparability graphs.
pub struct MirskyBase<'a>(pub &'a Poset);

impl BaseSolver for MirskyBase<'_> {
    fn solve(&mut self, w: &[VertexId]) -> Result<BaseSolution> {
        let (cover, independent) = self.0.mirsky_ordered(w);
        Ok(BaseSolution { cover, independent })
    }

    fn declared_phi(&self) -> Option<f64> {
        Some(1.0)
    }
}

/// First-fit clique partition and min-degree independent set on an explicit
/// graph. Makes no promise on the ratio.
pub struct GreedyBase<'a>(pub &'a AdjacencyGraph);

impl BaseSolver for GreedyBase<'_> {
    fn solve(&mut self, w: &[VertexId]) -> Result<BaseSolution> {
        let g = self.0;
        let mut degrees: Vec<(usize, VertexId)> =
            w.iter().map(|&v| (w.iter().filter(|&&u| g.has_edge(u, v)).count(), v)).collect();

        let mut order = degrees.clone();
        order.sort_unstable_by_key(|&(d, v)| (std::cmp::Reverse(d), v));
        let mut cover: Vec<Vec<VertexId>> = Vec::new();
        for (_, v) in order {
            match cover.iter_mut().find(|p| p.iter().all(|&u| g.has_edge(u, v))) {
                Some(p) => p.push(v),
                None => cover.push(vec![v]),
            }
        }

        degrees.sort_unstable();
        let mut independent: Vec<VertexId> = Vec::new();
        for (_, v) in degrees {
            if independent.iter().all(|&u| !g.has_edge(u, v)) {
                independent.push(v);
            }
        }
        Ok(BaseSolution { cover, independent })
    }
}

/// The perfect graph closing the intersection: a poset (incomparability
/// graph) or an interval layer.
#[derive(Clone, Debug, PartialEq)]
pub enum PerfectBase<T> {
    Poset(Poset),
    Interval(IntervalSupergraph<T>),
}

impl<T: Coord> PerfectBase<T> {
    pub fn n(&self) -> usize {
        match self {
            PerfectBase::Poset(p) => p.n(),
            PerfectBase::Interval(h) => h.n(),
        }
    }

    fn solve(&self, w: &[VertexId]) -> BaseSolution {
        let (cover, independent) = match self {
            PerfectBase::Poset(p) => p.mirsky_ordered(w),
            PerfectBase::Interval(h) => h.pierce_ordered(&h.to_pi_order(w)),
        };
        BaseSolution { cover, independent }
    }
}

impl<T: Coord> Adjacency for PerfectBase<T> {
    fn order(&self) -> usize {
        self.n()
    }

    fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        match self {
            PerfectBase::Poset(p) => p.adjacent(u, v),
            PerfectBase::Interval(h) => h.adjacent(u, v),
        }
    }
}

/// `t − 1` interval layers and a perfect base; `G` is their intersection
/// unless an explicit graph was supplied (`exact_intersection == false`).
#[derive(Clone, Debug, PartialEq)]
pub struct IntersectionModel<T> {
    n: usize,
    layers: Vec<IntervalSupergraph<T>>,
    base: PerfectBase<T>,
    exact_intersection: bool,
}

impl<T: Coord> IntersectionModel<T> {
    pub fn new(layers: Vec<IntervalSupergraph<T>>, base: PerfectBase<T>) -> Result<Self> {
        let n = base.n();
        for (i, l) in layers.iter().enumerate() {
            if l.n() != n {
                return Err(Error::LayerSize { layer: i + 1, got: l.n(), expected: n });
            }
        }
        Ok(IntersectionModel { n, layers, base, exact_intersection: true })
    }

    /// Marks the model as a set of supergraphs of a separately given `G`.
    pub fn into_supergraph_mode(mut self) -> Self {
        self.exact_intersection = false;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn layers(&self) -> &[IntervalSupergraph<T>] {
        &self.layers
    }

    pub fn base(&self) -> &PerfectBase<T> {
        &self.base
    }

    pub fn exact_intersection(&self) -> bool {
        self.exact_intersection
    }

    /// Number of supergraphs, the base included.
    pub fn t(&self) -> usize {
        self.layers.len() + 1
    }

    /// First interval supergraph, falling back to an interval base.
    pub fn first_interval_layer(&self) -> Option<&IntervalSupergraph<T>> {
        self.layers.first().or(match &self.base {
            PerfectBase::Interval(h) => Some(h),
            PerfectBase::Poset(_) => None,
        })
    }

    /// `α(H_i)` for each interval layer (the base excluded).
    pub fn alphas(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.alpha()).collect()
    }

    /// Explicit adjacency of the conjunction of all layers.
    pub fn conjunction_graph(&self) -> AdjacencyGraph {
        AdjacencyGraph::from_adjacency(self)
    }
}

impl<T: Coord> Adjacency for IntersectionModel<T> {
    fn order(&self) -> usize {
        self.n
    }

    fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        u != v && self.layers.iter().all(|l| l.intersects(u, v)) && self.base.adjacent(u, v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Validate each base-solver output (cliques, independence, ratio).
    pub check_contracts: bool,
    /// Record every split in [`CoverCertificate::trace`].
    pub trace: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { check_contracts: true, trace: false }
    }
}

impl SolveOptions {
    pub fn unchecked() -> Self {
        SolveOptions { check_contracts: false, trace: false }
    }

    pub fn traced() -> Self {
        SolveOptions { check_contracts: true, trace: true }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    /// Deepest recursion level reached, counting nested layers.
    pub depth: usize,
    /// Recursion nodes on interval layers.
    pub subproblems: usize,
    /// Nodes that were split around a separator.
    pub splits: usize,
    /// Calls into the final base solver.
    pub base_cases: usize,
}

/// One split of the recursion: `vertices` was divided on `layer` (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitRecord {
    pub layer: usize,
    pub vertices: VertexSet,
    pub v_j: VertexId,
    pub v_jstar: VertexId,
    pub alpha: usize,
    pub left: VertexSet,
    pub sep: VertexSet,
    pub right: VertexSet,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverCertificate {
    pub cover: CliqueCover,
    pub independent: VertexSet,
    /// `α(H_i)` for each interval layer that was peeled.
    pub alphas: Vec<usize>,
    pub t: usize,
    pub phi: f64,
    pub bound: f64,
    pub stats: SolveStats,
    pub trace: Vec<SplitRecord>,
}

impl CoverCertificate {
    /// `|C| / |I|`, an upper bound on the true approximation ratio.
    pub fn ratio(&self) -> f64 {
        if self.independent.is_empty() {
            0.0
        } else {
            self.cover.len() as f64 / self.independent.len() as f64
        }
    }
}

/// `2^(t−1)·φ·|I|·∏(log₂ α_i + 1)` with `t − 1 = alphas.len()`. Zero when
/// `|I| = 0`.
pub fn bound_value<F: BoundReal>(alphas: &[usize], independent_size: usize, phi: F) -> Result<F> {
    if independent_size == 0 {
        return Ok(F::zero());
    }
    let two = F::one() + F::one();
    let mut b = phi * F::from(independent_size).expect("size fits the float type");
    for &a in alphas {
        if a == 0 {
            return Err(Error::Input("α = 0 for a layer of a nonempty graph".into()));
        }
        let a = F::from(a).expect("α fits the float type");
        b = b * two * (a.log2() + F::one());
    }
    Ok(b)
}

/// Theorem-level solve: `g` with one interval supergraph `h` and an
/// arbitrary base solver for the cliques of `h`.
pub fn solve_theorem1<T: Coord>(
    g: &AdjacencyGraph,
    h: &IntervalSupergraph<T>,
    base: &mut dyn BaseSolver,
    opts: SolveOptions,
) -> Result<CoverCertificate> {
    if g.n() != h.n() {
        return Err(Error::LayerSize { layer: 1, got: h.n(), expected: g.n() });
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| !h.intersects(u, v)) {
        return Err(Error::SupergraphViolation { u, v, layer: 1 });
    }
    let declared = base.declared_phi();
    let layers = std::slice::from_ref(h);
    let mut engine = Engine::new(layers, Terminal::Custom(base), Some(g), opts, declared);
    let out = engine.solve_from(0, (0..g.n()).collect(), 0)?;
    let phi = declared.unwrap_or(engine.observed_phi);
    engine.finish(out, vec![h.alpha()], phi)
}

/// One interval layer over a perfect base.
pub fn solve_cor1<T: Coord>(model: &IntersectionModel<T>, opts: SolveOptions) -> Result<CoverCertificate> {
    if model.layers.len() != 1 {
        return Err(Error::Refused(format!(
            "single-layer solve needs exactly one interval layer, got {}; use the multi-layer solve",
            model.layers.len()
        )));
    }
    solve_layers(model, opts)
}

/// Peels the interval layers one after another; a clique of layer `k` is
/// handed to the recursion on layers `k+1..`, and the last one to the
/// perfect base.
pub fn solve_cor2<T: Coord>(model: &IntersectionModel<T>, opts: SolveOptions) -> Result<CoverCertificate> {
    solve_layers(model, opts)
}

fn solve_layers<T: Coord>(model: &IntersectionModel<T>, opts: SolveOptions) -> Result<CoverCertificate> {
    if !model.exact_intersection {
        return Err(Error::Refused(
            "G is not the intersection of the layers; cliques of the base need not be cliques of G".into(),
        ));
    }
    let check: Option<&dyn Adjacency> = Some(model);
    let mut engine = Engine::new(&model.layers, Terminal::Perfect(&model.base), check, opts, Some(1.0));
    let out = engine.solve_from(0, (0..model.n).collect(), 0)?;
    engine.finish(out, model.alphas(), 1.0)
}

enum Terminal<'a, T> {
    Perfect(&'a PerfectBase<T>),
    Custom(&'a mut dyn BaseSolver),
}

struct Partial {
    cover: Vec<Vec<VertexId>>,
    independent: Vec<VertexId>,
}

struct Engine<'a, T> {
    layers: &'a [IntervalSupergraph<T>],
    terminal: Terminal<'a, T>,
    check: Option<&'a dyn Adjacency>,
    opts: SolveOptions,
    declared_phi: Option<f64>,
    observed_phi: f64,
    stats: SolveStats,
    trace: Vec<SplitRecord>,
}

impl<'a, T: Coord> Engine<'a, T> {
    fn new(
        layers: &'a [IntervalSupergraph<T>],
        terminal: Terminal<'a, T>,
        check: Option<&'a dyn Adjacency>,
        opts: SolveOptions,
        declared_phi: Option<f64>,
    ) -> Self {
        Engine {
            layers,
            terminal,
            check,
            opts,
            declared_phi,
            observed_phi: 1.0,
            stats: SolveStats::default(),
            trace: Vec::new(),
        }
    }

    /// Solves `G[w]` using layers `k..`; `w` must be a clique of layer `k−1`.
    fn solve_from(&mut self, k: usize, w: Vec<VertexId>, depth: usize) -> Result<Partial> {
        if w.is_empty() {
            return Ok(Partial { cover: Vec::new(), independent: Vec::new() });
        }
        if k == self.layers.len() {
            return self.terminal(w);
        }
        let w_pi = self.layers[k].to_pi_order(&w);
        self.divide(k, w_pi, depth)
    }

    fn divide(&mut self, k: usize, w_pi: Vec<VertexId>, depth: usize) -> Result<Partial> {
        let layers = self.layers;
        self.stats.subproblems += 1;
        self.stats.depth = self.stats.depth.max(depth);

        // α(H_k[w]) = 1: w is a clique of layer k
        let Some(split) = layers[k].split_ordered(&w_pi) else {
            return self.solve_from(k + 1, w_pi, depth + 1);
        };
        self.stats.splits += 1;
        if self.opts.trace {
            self.trace.push(SplitRecord {
                layer: k,
                vertices: w_pi.iter().copied().collect(),
                v_j: split.v_j,
                v_jstar: split.v_jstar,
                alpha: split.alpha,
                left: split.left.iter().copied().collect(),
                sep: split.sep.iter().copied().collect(),
                right: split.right.iter().copied().collect(),
            });
        }

        let left = self.divide(k, split.left, depth + 1)?;
        let sep = self.solve_from(k + 1, split.sep, depth + 1)?;
        let right = self.divide(k, split.right, depth + 1)?;

        let mut cover = left.cover;
        cover.extend(sep.cover);
        cover.extend(right.cover);
        let mut combined = left.independent;
        combined.extend(right.independent);
        let independent = if sep.independent.len() > combined.len() { sep.independent } else { combined };
        Ok(Partial { cover, independent })
    }

    fn terminal(&mut self, w: Vec<VertexId>) -> Result<Partial> {
        self.stats.base_cases += 1;
        let sol = match &mut self.terminal {
            Terminal::Perfect(b) => b.solve(&w),
            Terminal::Custom(s) => s.solve(&w)?,
        };
        if sol.independent.is_empty() {
            return Err(Error::Contract(format!("empty independent set for {} vertices", w.len())));
        }
        let ratio = sol.cover.len() as f64 / sol.independent.len() as f64;
        self.observed_phi = self.observed_phi.max(ratio);
        if self.opts.check_contracts {
            self.check_base(&w, &sol, ratio)?;
        }
        Ok(Partial { cover: sol.cover, independent: sol.independent })
    }

    fn check_base(&self, w: &[VertexId], sol: &BaseSolution, ratio: f64) -> Result<()> {
        let mut expected = w.to_vec();
        expected.sort_unstable();
        let mut got: Vec<VertexId> = sol.cover.iter().flatten().copied().collect();
        got.sort_unstable();
        if got != expected {
            return Err(Error::Contract(format!("cover of {w:?} is not a partition of it")));
        }
        let mut ind = sol.independent.clone();
        ind.sort_unstable();
        ind.dedup();
        if ind.len() != sol.independent.len() || ind.iter().any(|v| expected.binary_search(v).is_err()) {
            return Err(Error::Contract(format!("independent set {:?} is not a subset of {w:?}", sol.independent)));
        }
        if let Some(g) = self.check {
            for part in &sol.cover {
                if let Some((u, v)) = first_pair(part, |u, v| !g.adjacent(u, v)) {
                    return Err(Error::Contract(format!("part {part:?} is not a clique: {u},{v} not adjacent")));
                }
            }
            if let Some((u, v)) = first_pair(&sol.independent, |u, v| g.adjacent(u, v)) {
                return Err(Error::Contract(format!("independent set has edge {u},{v}")));
            }
        }
        if let Some(phi) = self.declared_phi {
            if ratio > phi + 1e-9 {
                return Err(Error::Contract(format!("ratio {ratio} exceeds declared φ = {phi}")));
            }
        }
        Ok(())
    }

    fn finish(self, out: Partial, alphas: Vec<usize>, phi: f64) -> Result<CoverCertificate> {
        let independent = VertexSet::from_iter_dedup(out.independent);
        let bound = bound_value(&alphas, independent.len(), phi)?;
        Ok(CoverCertificate {
            cover: CliqueCover::from_parts(out.cover),
            independent,
            t: alphas.len() + 1,
            alphas,
            phi,
            bound,
            stats: self.stats,
            trace: self.trace,
        })
    }
}

fn first_pair(ids: &[VertexId], bad: impl Fn(VertexId, VertexId) -> bool) -> Option<(VertexId, VertexId)> {
    ids.iter()
        .enumerate()
        .find_map(|(i, &u)| ids[i + 1..].iter().find(|&&v| bad(u, v)).map(|&v| (u, v)))
}

/// A single failed check in a [`VerificationReport`].
#[derive(Clone, Debug, PartialEq)]
pub enum Failure {
    OutOfRange(VertexId),
    EmptyPart(usize),
    CoveredTwice(VertexId),
    Uncovered(VertexId),
    NonEdgeInPart { part: usize, u: VertexId, v: VertexId },
    EdgeInIndependent { u: VertexId, v: VertexId },
    BoundExceeded { cover: usize, bound: f64 },
    BoundMismatch { stated: f64, recomputed: f64 },
    IndependentExceedsCover { independent: usize, cover: usize },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::OutOfRange(v) => write!(f, "vertex {v} out of range"),
            Failure::EmptyPart(p) => write!(f, "cover part {p} is empty"),
            Failure::CoveredTwice(v) => write!(f, "vertex {v} covered more than once"),
            Failure::Uncovered(v) => write!(f, "vertex {v} not covered"),
            Failure::NonEdgeInPart { part, u, v } => write!(f, "part {part}: {u} and {v} not adjacent"),
            Failure::EdgeInIndependent { u, v } => write!(f, "independent set contains edge {u}-{v}"),
            Failure::BoundExceeded { cover, bound } => write!(f, "|C| = {cover} exceeds bound {bound}"),
            Failure::BoundMismatch { stated, recomputed } => {
                write!(f, "stated bound {stated} differs from recomputed {recomputed}")
            }
            Failure::IndependentExceedsCover { independent, cover } => {
                write!(f, "|I| = {independent} exceeds |C| = {cover}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub partition: bool,
    pub cliques: bool,
    pub independent: bool,
    pub bound: bool,
    /// `|I| ≤ |C|`.
    pub weak_duality: bool,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.partition && self.cliques && self.independent && self.bound && self.weak_duality
    }
}

/// Checks a certificate against `g` without trusting the solver.
pub fn verify_certificate<A: Adjacency + ?Sized>(g: &A, cert: &CoverCertificate) -> VerificationReport {
    let n = g.order();
    let mut failures = Vec::new();

    let mut partition = true;
    let mut seen = vec![false; n];
    for (pi, part) in cert.cover.parts().iter().enumerate() {
        if part.is_empty() {
            partition = false;
            failures.push(Failure::EmptyPart(pi));
        }
        for v in part {
            if v >= n {
                partition = false;
                failures.push(Failure::OutOfRange(v));
            } else if std::mem::replace(&mut seen[v], true) {
                partition = false;
                failures.push(Failure::CoveredTwice(v));
            }
        }
    }
    for (v, _) in seen.iter().enumerate().filter(|(_, s)| !**s) {
        partition = false;
        failures.push(Failure::Uncovered(v));
    }

    let mut cliques = true;
    for (pi, part) in cert.cover.parts().iter().enumerate() {
        let ids: Vec<_> = part.iter().filter(|&v| v < n).collect();
        if let Some((u, v)) = first_pair(&ids, |u, v| !g.adjacent(u, v)) {
            cliques = false;
            failures.push(Failure::NonEdgeInPart { part: pi, u, v });
        }
    }

    let mut independent = true;
    for v in cert.independent.iter().filter(|&v| v >= n) {
        independent = false;
        failures.push(Failure::OutOfRange(v));
    }
    let ids: Vec<_> = cert.independent.iter().filter(|&v| v < n).collect();
    if let Some((u, v)) = first_pair(&ids, |u, v| g.adjacent(u, v)) {
        independent = false;
        failures.push(Failure::EdgeInIndependent { u, v });
    }

    let mut bound = true;
    let c = cert.cover.len();
    if c as f64 > cert.bound + 1e-9 {
        bound = false;
        failures.push(Failure::BoundExceeded { cover: c, bound: cert.bound });
    }
    match bound_value(&cert.alphas, cert.independent.len(), cert.phi) {
        Ok(recomputed) if (recomputed - cert.bound).abs() <= 1e-9 * recomputed.abs().max(1.0) => {}
        Ok(recomputed) => {
            bound = false;
            failures.push(Failure::BoundMismatch { stated: cert.bound, recomputed });
        }
        Err(_) => {
            bound = false;
            failures.push(Failure::BoundMismatch { stated: cert.bound, recomputed: f64::NAN });
        }
    }

    let weak_duality = cert.independent.len() <= c;
    if !weak_duality {
        failures.push(Failure::IndependentExceedsCover { independent: cert.independent.len(), cover: c });
    }

    VerificationReport { partition, cliques, independent, bound, weak_duality, failures }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn layer(pairs: &[(i64, i64)]) -> IntervalSupergraph<i64> {
        IntervalSupergraph::from_pairs(pairs).unwrap()
    }

    fn set(ids: &[usize]) -> VertexSet {
        VertexSet::new(ids.to_vec()).unwrap()
    }

    #[test]
    fn bound_value_examples() {
        assert_eq!(bound_value(&[4], 3, 1.0).unwrap(), 18.0);
        assert_eq!(bound_value(&[2, 2], 8, 1.0).unwrap(), 128.0);
        assert_eq!(bound_value(&[1], 5, 1.0).unwrap(), 10.0);
        assert_eq!(bound_value(&[1], 5, 1.0f32).unwrap(), 10.0f32);
        assert_eq!(bound_value(&[], 0, 1.0).unwrap(), 0.0);
        assert!(bound_value(&[0], 2, 1.0).is_err());
    }

    #[test]
    fn theorem1_single_vertex() {
        let g = AdjacencyGraph::new(1);
        let h = layer(&[(0, 0)]);
        let cert = solve_theorem1(&g, &h, &mut PierceBase(&h), SolveOptions::default()).unwrap();
        assert_eq!(cert.cover.parts(), &[set(&[0])]);
        assert_eq!(cert.independent, set(&[0]));
        assert_eq!(cert.bound, 2.0);
    }

    #[test]
    fn theorem1_four_disjoint() {
        let h = layer(&[(0, 2), (10, 12), (20, 22), (30, 32)]);
        let g = AdjacencyGraph::from_adjacency(&h);
        let cert = solve_theorem1(&g, &h, &mut PierceBase(&h), SolveOptions::default()).unwrap();
        assert_eq!(cert.cover.len(), 4);
        assert!(cert.cover.parts().iter().all(|p| p.len() == 1));
        assert_eq!(cert.independent, VertexSet::full(4));
        assert_eq!(cert.bound, 24.0);
        assert!(verify_certificate(&g, &cert).passed());
    }

    #[test]
    fn theorem1_edgeless_g() {
        let h = layer(&[(0, 1), (2, 3), (4, 5), (6, 7), (8, 9)]);
        let g = AdjacencyGraph::new(5);
        let cert = solve_theorem1(&g, &h, &mut GreedyBase(&g), SolveOptions::default()).unwrap();
        assert_eq!(cert.cover.len(), 5);
        assert_eq!(cert.independent.len(), 5);
        assert_eq!(cert.phi, 1.0);
    }

    #[test]
    fn theorem1_rejects_non_supergraph() {
        let h = layer(&[(0, 1), (5, 6)]);
        let g = AdjacencyGraph::from_edges(2, &[(0, 1)]).unwrap();
        let err = solve_theorem1(&g, &h, &mut GreedyBase(&g), SolveOptions::default()).unwrap_err();
        assert_eq!(err, Error::SupergraphViolation { u: 0, v: 1, layer: 1 });
    }

    #[test]
    fn lying_base_solver_is_caught() {
        struct Liar;
        impl BaseSolver for Liar {
            fn solve(&mut self, w: &[VertexId]) -> Result<BaseSolution> {
                Ok(BaseSolution { cover: vec![w.to_vec()], independent: vec![w[0]] })
            }
            fn declared_phi(&self) -> Option<f64> {
                Some(1.0)
            }
        }
        // all intervals share a point, but G is edgeless: one part is not a clique
        let h = layer(&[(0, 5), (1, 6), (2, 7)]);
        let g = AdjacencyGraph::new(3);
        let err = solve_theorem1(&g, &h, &mut Liar, SolveOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Contract(_)), "{err:?}");
        // without checks the bad certificate comes out and verification flags it
        let cert = solve_theorem1(&g, &h, &mut Liar, SolveOptions::unchecked()).unwrap();
        let report = verify_certificate(&g, &cert);
        assert!(!report.cliques);
    }

    #[test]
    fn observed_phi_for_greedy_base() {
        // 5-cycle inside one clique of H: greedy cannot do better than 3 vs 2
        let h = layer(&[(0, 9); 5]);
        let g = AdjacencyGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let cert = solve_theorem1(&g, &h, &mut GreedyBase(&g), SolveOptions::default()).unwrap();
        assert_eq!(cert.cover.len(), 3);
        assert_eq!(cert.independent.len(), 2);
        assert_eq!(cert.phi, 1.5);
        assert!(verify_certificate(&g, &cert).passed());
    }

    fn rect_model() -> IntersectionModel<i64> {
        // R0=[0,2]x[0,2], R1=[1,3]x[10,12], R2=[1,3]x[0,2]
        let x = layer(&[(0, 2), (1, 3), (1, 3)]);
        let y = layer(&[(0, 2), (10, 12), (0, 2)]);
        IntersectionModel::new(vec![x], PerfectBase::Interval(y)).unwrap()
    }

    #[test]
    fn cor1_rectangles() {
        let m = rect_model();
        let cert = solve_cor1(&m, SolveOptions::default()).unwrap();
        assert_eq!(cert.cover.parts(), &[set(&[0, 2]), set(&[1])]);
        assert_eq!(cert.independent.len(), 2);
        assert_eq!(cert.alphas, vec![1]);
        assert_eq!(cert.bound, 4.0);
        assert!(verify_certificate(&m, &cert).passed());
        assert_eq!(solve_cor2(&m, SolveOptions::default()).unwrap(), cert);
    }

    #[test]
    fn cor1_chain_poset_with_complete_layer() {
        let x = layer(&[(0, 5), (1, 5), (2, 5)]);
        let p = Poset::close_transitively(3, &[(0, 1), (1, 2)]).unwrap();
        let m = IntersectionModel::new(vec![x], PerfectBase::Poset(p)).unwrap();
        let cert = solve_cor1(&m, SolveOptions::default()).unwrap();
        assert_eq!(cert.cover.parts(), &[set(&[0]), set(&[1]), set(&[2])]);
        assert_eq!(cert.stats.base_cases, 1);
    }

    #[test]
    fn cor1_empty_and_refusals() {
        let m = IntersectionModel::<i64>::new(vec![layer(&[])], PerfectBase::Interval(layer(&[]))).unwrap();
        let cert = solve_cor1(&m, SolveOptions::default()).unwrap();
        assert!(cert.cover.is_empty() && cert.independent.is_empty());
        assert_eq!(cert.bound, 0.0);
        assert!(verify_certificate(&m, &cert).passed());

        let two = IntersectionModel::new(vec![layer(&[(0, 1)]), layer(&[(0, 1)])], PerfectBase::Interval(layer(&[(0, 1)])))
            .unwrap();
        assert!(matches!(solve_cor1(&two, SolveOptions::default()), Err(Error::Refused(_))));
        assert!(matches!(solve_cor2(&rect_model().into_supergraph_mode(), SolveOptions::default()), Err(Error::Refused(_))));
    }

    #[test]
    fn verification_failures_are_named() {
        let m = rect_model();
        let g = m.conjunction_graph();
        let mut cert = solve_cor1(&m, SolveOptions::default()).unwrap();
        cert.cover = CliqueCover::new(vec![set(&[0, 1]), set(&[2])]);
        let r = verify_certificate(&g, &cert);
        assert!(!r.cliques);
        assert!(r.failures.contains(&Failure::NonEdgeInPart { part: 0, u: 0, v: 1 }));

        cert.cover = CliqueCover::new(vec![set(&[0, 2])]);
        let r = verify_certificate(&g, &cert);
        assert!(!r.partition);
        assert!(r.failures.contains(&Failure::Uncovered(1)));
    }

    #[test]
    fn layer_sizes_must_agree() {
        let err = IntersectionModel::new(vec![layer(&[(0, 1)])], PerfectBase::Interval(layer(&[(0, 1), (2, 3)])));
        assert_eq!(err.unwrap_err(), Error::LayerSize { layer: 1, got: 1, expected: 2 });
    }
}
