//! Dense undirected graphs and the validation predicates used on certificates.

use std::fmt;

use crate::error::{Error, Result};

/// Vertex index in `0..n`. Induced views keep a map back to the original ids.
pub type VertexId = usize;

/// Anything that can answer pairwise adjacency for vertices `0..order()`.
pub trait Adjacency {
    fn order(&self) -> usize;
    fn adjacent(&self, u: VertexId, v: VertexId) -> bool;
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from arbitrary ids; duplicates are rejected.
    pub fn new(mut ids: Vec<VertexId>) -> Result<Self> {
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(VertexSet(ids))
    }

    /// Builds a set, silently merging duplicates.
    pub fn from_iter_dedup<I: IntoIterator<Item = VertexId>>(ids: I) -> Self {
        let mut v: Vec<_> = ids.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, VertexId>> {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    /// Fails with the first id that is not below `n`.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&id) if id >= n => Err(Error::VertexOutOfRange { id, n }),
            _ => Ok(()),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, VertexId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSet::from_iter_dedup(iter)
    }
}

/// Simple undirected graph stored as a symmetric bit matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct AdjacencyGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl AdjacencyGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        AdjacencyGraph { n, words, bits: vec![0; n * words] }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_predicate(n, |_, _| true)
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph whose edges are the unordered pairs `u < v` with `pred(u, v)`.
    pub fn from_predicate<F: FnMut(VertexId, VertexId) -> bool>(n: usize, mut pred: F) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if pred(u, v) {
                    g.set(u, v);
                    g.set(v, u);
                }
            }
        }
        g
    }

    pub fn from_adjacency<A: Adjacency + ?Sized>(a: &A) -> Self {
        Self::from_predicate(a.order(), |u, v| a.adjacent(u, v))
    }

    #[inline]
    fn set(&mut self, u: VertexId, v: VertexId) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Input(format!("self-loop at vertex {u}")));
        }
        self.set(u, v);
        self.set(v, u);
        Ok(())
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { id: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / 64] & (1 << (v % 64)) != 0
    }

    fn row(&self, u: VertexId) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Edges as ordered pairs `u < v`, lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn complement(&self) -> AdjacencyGraph {
        Self::from_predicate(self.n, |u, v| !self.has_edge(u, v))
    }

    /// `G[W]` together with the map from new ids back to original ids.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<InducedSubgraph> {
        w.check_range(self.n)?;
        let ids = w.as_slice();
        let graph = Self::from_predicate(ids.len(), |a, b| self.has_edge(ids[a], ids[b]));
        Ok(InducedSubgraph { graph, original: ids.to_vec() })
    }

    pub fn is_clique(&self, w: &VertexSet) -> Result<bool> {
        w.check_range(self.n)?;
        Ok(self.find_non_edge(w.as_slice()).is_none())
    }

    pub fn is_independent(&self, w: &VertexSet) -> Result<bool> {
        w.check_range(self.n)?;
        Ok(self.find_edge(w.as_slice()).is_none())
    }

    /// First pair in `ids` that is not adjacent.
    pub fn find_non_edge(&self, ids: &[VertexId]) -> Option<(VertexId, VertexId)> {
        for (i, &u) in ids.iter().enumerate() {
            for &v in &ids[i + 1..] {
                if u == v || !self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// First pair in `ids` that is adjacent.
    pub fn find_edge(&self, ids: &[VertexId]) -> Option<(VertexId, VertexId)> {
        for (i, &u) in ids.iter().enumerate() {
            for &v in &ids[i + 1..] {
                if self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// True iff no edge joins `a` and `b`. The sets must be disjoint.
    pub fn are_separated(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        a.check_range(self.n)?;
        b.check_range(self.n)?;
        if let Some(v) = a.iter().find(|&v| b.contains(v)) {
            return Err(Error::NotDisjoint(v));
        }
        Ok(a.iter().all(|u| b.iter().all(|v| !self.has_edge(u, v))))
    }

    /// Every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of<A: Adjacency + ?Sized>(&self, other: &A) -> bool {
        other.order() == self.n && self.edges().all(|(u, v)| other.adjacent(u, v))
    }
}

impl Adjacency for AdjacencyGraph {
    fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.has_edge(u, v)
    }
}

impl fmt::Debug for AdjacencyGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AdjacencyGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// An induced subgraph with local ids `0..k` and their original ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: AdjacencyGraph,
    pub original: Vec<VertexId>,
}

impl InducedSubgraph {
    pub fn original_id(&self, local: VertexId) -> VertexId {
        self.original[local]
    }

    pub fn local_id(&self, original: VertexId) -> Option<VertexId> {
        self.original.binary_search(&original).ok()
    }

    pub fn to_original(&self, local: &VertexSet) -> VertexSet {
        local.iter().map(|v| self.original[v]).collect()
    }
}
