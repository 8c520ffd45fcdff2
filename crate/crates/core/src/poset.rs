//! Strict partial orders used as the perfect base layer. Edges of the
//! incomparability graph join incomparable elements, so antichains are
//! cliques and chains are independent sets.

use crate::cover::CliqueCover;
use crate::error::{Error, Result};
use crate::graph::{Adjacency, AdjacencyGraph, VertexId, VertexSet};

/// A transitively closed strict order on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    words: usize,
    // row u has bit v set iff u < v
    less: Vec<u64>,
    // a linear extension; topo_index[v] is v's place in it
    topo_index: Vec<usize>,
}

impl Poset {
    /// The antichain on `n` elements.
    pub fn antichain(n: usize) -> Self {
        Self::close_transitively(n, &[]).expect("no relations, no cycle")
    }

    /// Transitive closure of the relation `edges` (pairs `(u, v)` meaning
    /// `u < v`). Fails on a cycle, reporting one.
    pub fn close_transitively(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { id: x, n });
                }
            }
            if u == v {
                return Err(Error::Cycle { witness: vec![u, u] });
            }
            succ[u].push(v);
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }
        for s in &succ {
            for &v in s {
                indeg[v] += 1;
            }
        }

        // Kahn, smallest id first for a deterministic extension
        let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<usize>> =
            (0..n).filter(|&v| indeg[v] == 0).map(std::cmp::Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(std::cmp::Reverse(u)) = ready.pop() {
            order.push(u);
            for &v in &succ[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    ready.push(std::cmp::Reverse(v));
                }
            }
        }
        if order.len() < n {
            return Err(Error::Cycle { witness: find_cycle(&succ, &indeg) });
        }

        let words = n.div_ceil(64);
        let mut less = vec![0u64; n * words];
        for &u in order.iter().rev() {
            for &v in &succ[u] {
                less[u * words + v / 64] |= 1 << (v % 64);
                for w in 0..words {
                    let bits = less[v * words + w];
                    less[u * words + w] |= bits;
                }
            }
        }
        let mut topo_index = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            topo_index[v] = i;
        }
        Ok(Poset { n, words, less, topo_index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `u < v` in the order.
    #[inline]
    pub fn less(&self, u: VertexId, v: VertexId) -> bool {
        self.less[u * self.words + v / 64] & (1 << (v % 64)) != 0
    }

    #[inline]
    pub fn comparable(&self, u: VertexId, v: VertexId) -> bool {
        self.less(u, v) || self.less(v, u)
    }

    /// All pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn relations(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.less(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn incomparability_adjacency(&self) -> AdjacencyGraph {
        AdjacencyGraph::from_predicate(self.n, |u, v| !self.comparable(u, v))
    }

    /// Antichain partition of `w` by height, with a longest chain of the same
    /// size. Parts come out lowest level first.
    pub fn mirsky_base_solver(&self, w: &VertexSet) -> Result<(CliqueCover, VertexSet)> {
        w.check_range(self.n)?;
        let (parts, chain) = self.mirsky_ordered(w.as_slice());
        Ok((CliqueCover::from_parts(parts), chain.into_iter().collect()))
    }

    pub(crate) fn mirsky_ordered(&self, w: &[VertexId]) -> (Vec<Vec<VertexId>>, Vec<VertexId>) {
        let mut items = w.to_vec();
        items.sort_unstable_by_key(|&v| self.topo_index[v]);
        let k = items.len();
        if k == 0 {
            return (Vec::new(), Vec::new());
        }

        // up[i]: longest chain ending at items[i]; down[i]: starting there
        let mut up = vec![1usize; k];
        for i in 0..k {
            for j in 0..i {
                if up[j] + 1 > up[i] && self.less(items[j], items[i]) {
                    up[i] = up[j] + 1;
                }
            }
        }
        let mut down = vec![1usize; k];
        for i in (0..k).rev() {
            for j in i + 1..k {
                if down[j] + 1 > down[i] && self.less(items[i], items[j]) {
                    down[i] = down[j] + 1;
                }
            }
        }
        let height = *up.iter().max().unwrap();

        let mut parts = vec![Vec::new(); height];
        for (i, &v) in items.iter().enumerate() {
            parts[up[i] - 1].push(v);
        }
        for p in &mut parts {
            p.sort_unstable();
        }

        // lexicographically least maximum chain, read bottom to top
        let mut chain = Vec::with_capacity(height);
        let mut prev: Option<VertexId> = None;
        for remaining in (1..=height).rev() {
            let next = (0..k)
                .filter(|&i| down[i] == remaining && prev.is_none_or(|p| self.less(p, items[i])))
                .map(|i| items[i])
                .min()
                .expect("a maximum chain continues");
            chain.push(next);
            prev = Some(next);
        }
        (parts, chain)
    }
}

impl Adjacency for Poset {
    fn order(&self) -> usize {
        self.n
    }

    fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        u != v && !self.comparable(u, v)
    }
}

// Every vertex left with positive in-degree after Kahn lies on or behind a
// cycle, so walking predecessors inside that set must repeat.
fn find_cycle(succ: &[Vec<VertexId>], indeg: &[usize]) -> Vec<VertexId> {
    let n = succ.len();
    let mut pred: Vec<Option<VertexId>> = vec![None; n];
    for u in 0..n {
        if indeg[u] == 0 {
            continue;
        }
        for &v in &succ[u] {
            if indeg[v] > 0 && pred[v].is_none() {
                pred[v] = Some(u);
            }
        }
    }
    let start = (0..n).find(|&v| indeg[v] > 0).expect("cycle exists");
    let mut seen = vec![usize::MAX; n];
    let mut walk = Vec::new();
    let mut cur = start;
    while seen[cur] == usize::MAX {
        seen[cur] = walk.len();
        walk.push(cur);
        cur = pred[cur].expect("leftover vertex has a leftover predecessor");
    }
    let mut cycle = walk[seen[cur]..].to_vec();
    cycle.reverse();
    cycle.push(cycle[0]);
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[usize]) -> VertexSet {
        VertexSet::new(ids.to_vec()).unwrap()
    }

    #[test]
    fn closure_examples() {
        let p = Poset::close_transitively(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.less(0, 2));
        assert_eq!(p.relations(), vec![(0, 1), (0, 2), (1, 2)]);

        match Poset::close_transitively(2, &[(0, 1), (1, 0)]) {
            Err(Error::Cycle { witness }) => {
                assert_eq!(witness.first(), witness.last());
                assert_eq!(witness.len(), 3);
            }
            other => panic!("expected cycle, got {other:?}"),
        }

        let p = Poset::close_transitively(3, &[]).unwrap();
        assert!(p.relations().is_empty());
    }

    #[test]
    fn cycle_witness_is_a_real_cycle() {
        let edges = [(0, 1), (1, 2), (2, 3), (3, 1), (4, 0)];
        let Err(Error::Cycle { witness }) = Poset::close_transitively(5, &edges) else {
            panic!("expected cycle");
        };
        for w in witness.windows(2) {
            assert!(edges.contains(&(w[0], w[1])), "{witness:?}");
        }
    }

    #[test]
    fn incomparability_examples() {
        let chain = Poset::close_transitively(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(chain.incomparability_adjacency().edge_count(), 0);
        assert_eq!(Poset::antichain(3).incomparability_adjacency().edge_count(), 3);
        let v = Poset::close_transitively(3, &[(0, 1), (0, 2)]).unwrap();
        let g = v.incomparability_adjacency();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn mirsky_examples() {
        let chain = Poset::close_transitively(3, &[(0, 1), (1, 2)]).unwrap();
        let (cover, c) = chain.mirsky_base_solver(&VertexSet::full(3)).unwrap();
        assert_eq!(cover.parts(), &[set(&[0]), set(&[1]), set(&[2])]);
        assert_eq!(c, set(&[0, 1, 2]));

        let v = Poset::close_transitively(3, &[(0, 1), (0, 2)]).unwrap();
        let (cover, c) = v.mirsky_base_solver(&VertexSet::full(3)).unwrap();
        assert_eq!(cover.parts(), &[set(&[0]), set(&[1, 2])]);
        assert_eq!(c, set(&[0, 1]));

        let (cover, c) = Poset::antichain(4).mirsky_base_solver(&VertexSet::full(4)).unwrap();
        assert_eq!(cover.parts(), &[set(&[0, 1, 2, 3])]);
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn mirsky_on_subset() {
        // 0<1<2<3, restricted to {1,3}
        let p = Poset::close_transitively(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (cover, c) = p.mirsky_base_solver(&set(&[1, 3])).unwrap();
        assert_eq!(cover.len(), 2);
        assert_eq!(c, set(&[1, 3]));
    }

    #[test]
    fn wide_closure() {
        let edges: Vec<_> = (0..99).map(|i| (i, i + 1)).collect();
        let p = Poset::close_transitively(100, &edges).unwrap();
        assert!(p.less(0, 99));
        assert!(!p.less(99, 0));
        assert_eq!(p.relations().len(), 100 * 99 / 2);
    }
}
