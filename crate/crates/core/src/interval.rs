//! Closed intervals, canonical orderings, and the exact interval-graph
//! primitives that drive the divide-and-conquer.

use crate::cover::CliqueCover;
use crate::error::{Error, Result};
use crate::graph::{Adjacency, VertexId, VertexSet};
use crate::scalar::Coord;

/// Closed interval `[lo, hi]`. Touching endpoints intersect.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval<T> {
    lo: T,
    hi: T,
}

impl<T: Coord> Interval<T> {
    pub fn new(lo: T, hi: T) -> Result<Self> {
        // written this way so NaN endpoints are rejected too
        if lo <= hi {
            Ok(Interval { lo, hi })
        } else {
            Err(Error::InvalidInterval { lo: lo.to_string(), hi: hi.to_string() })
        }
    }

    #[inline]
    pub fn lo(&self) -> T {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> T {
        self.hi
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    #[inline]
    pub fn contains_point(&self, p: T) -> bool {
        self.lo <= p && p <= self.hi
    }

    /// Strict containment on both ends: `self` lies inside `other`.
    #[inline]
    pub fn strictly_inside(&self, other: &Self) -> bool {
        other.lo < self.lo && self.hi < other.hi
    }
}

/// Permutation sorting the intervals by `(lo, hi, id)` ascending.
pub fn canonical_order<T: Coord>(intervals: &[Interval<T>]) -> Vec<VertexId> {
    let mut pi: Vec<VertexId> = (0..intervals.len()).collect();
    pi.sort_by(|&a, &b| {
        let (x, y) = (&intervals[a], &intervals[b]);
        x.lo.total_cmp(&y.lo).then_with(|| x.hi.total_cmp(&y.hi)).then(a.cmp(&b))
    });
    pi
}

/// An interval graph `H` given by its representation, with the canonical
/// ordering `π` and its inverse precomputed.
#[derive(Clone, Debug, PartialEq)]
pub struct IntervalSupergraph<T> {
    intervals: Vec<Interval<T>>,
    pi: Vec<VertexId>,
    pos: Vec<usize>,
    // rank of each vertex when sorted by (hi, pos)
    hi_rank: Vec<usize>,
}

impl<T: Coord> IntervalSupergraph<T> {
    pub fn new(intervals: Vec<Interval<T>>) -> Self {
        let pi = canonical_order(&intervals);
        let mut pos = vec![0; intervals.len()];
        for (p, &v) in pi.iter().enumerate() {
            pos[v] = p;
        }
        let mut by_hi = pi.clone();
        by_hi.sort_by(|&a, &b| intervals[a].hi.total_cmp(&intervals[b].hi).then(pos[a].cmp(&pos[b])));
        let mut hi_rank = vec![0; intervals.len()];
        for (r, &v) in by_hi.iter().enumerate() {
            hi_rank[v] = r;
        }
        IntervalSupergraph { intervals, pi, pos, hi_rank }
    }

    pub fn from_pairs(pairs: &[(T, T)]) -> Result<Self> {
        let intervals = pairs.iter().map(|&(lo, hi)| Interval::new(lo, hi)).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(intervals))
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[Interval<T>] {
        &self.intervals
    }

    pub fn interval(&self, v: VertexId) -> &Interval<T> {
        &self.intervals[v]
    }

    /// The canonical ordering `π`: `pi()[p]` is the vertex at position `p`.
    pub fn pi(&self) -> &[VertexId] {
        &self.pi
    }

    /// Position of `v` in `π`.
    pub fn position(&self, v: VertexId) -> usize {
        self.pos[v]
    }

    #[inline]
    pub fn intersects(&self, u: VertexId, v: VertexId) -> bool {
        self.intervals[u].intersects(&self.intervals[v])
    }

    /// `N(v_i)`: vertices at positions before `i` whose intervals meet that
    /// of `v_i`. All of them contain `v_i.lo`, so the result is a clique.
    pub fn left_neighborhood(&self, i: usize) -> Result<VertexSet> {
        if i >= self.n() {
            return Err(Error::PositionOutOfRange { pos: i, n: self.n() });
        }
        let lo = self.intervals[self.pi[i]].lo;
        Ok(self.pi[..i].iter().copied().filter(|&u| self.intervals[u].hi >= lo).collect())
    }

    /// Maximum independent set of `H[w]`, by earliest right endpoint.
    pub fn greedy_mis(&self, w: &VertexSet) -> Result<VertexSet> {
        w.check_range(self.n())?;
        Ok(self.mis_ordered(w.as_slice()).into_iter().collect())
    }

    /// Independence number of the whole layer.
    pub fn alpha(&self) -> usize {
        self.mis_ordered(&self.pi).len()
    }

    /// Minimum clique cover of `H[w]` by greedy piercing, with the chosen
    /// intervals as a matching independent set of the same size.
    pub fn pierce_cover(&self, w: &VertexSet) -> Result<(CliqueCover, VertexSet)> {
        w.check_range(self.n())?;
        let (parts, independent) = self.pierce_ordered(&self.to_pi_order(w.as_slice()));
        Ok((CliqueCover::from_parts(parts), independent.into_iter().collect()))
    }

    /// Splits `w` around the separator `N(v_{j*})`; see [`Split`].
    pub fn split_sets(&self, w: &VertexSet) -> Result<Split> {
        w.check_range(self.n())?;
        let ordered = self.to_pi_order(w.as_slice());
        let independent: VertexSet = self.mis_ordered(&ordered).into_iter().collect();
        Ok(match self.split_ordered(&ordered) {
            Some(p) => Split {
                feasible: true,
                independent,
                v_j: Some(p.v_j),
                v_jstar: Some(p.v_jstar),
                left: p.left.into_iter().collect(),
                sep: p.sep.into_iter().collect(),
                right: p.right.into_iter().collect(),
            },
            None => Split {
                feasible: false,
                independent,
                v_j: None,
                v_jstar: None,
                left: VertexSet::empty(),
                sep: VertexSet::empty(),
                right: VertexSet::empty(),
            },
        })
    }

    pub(crate) fn to_pi_order(&self, w: &[VertexId]) -> Vec<VertexId> {
        let mut v = w.to_vec();
        v.sort_unstable_by_key(|&x| self.pos[x]);
        v
    }

    fn by_hi(&self, w: &[VertexId]) -> Vec<VertexId> {
        let mut v = w.to_vec();
        v.sort_unstable_by_key(|&x| self.hi_rank[x]);
        v
    }

    /// Greedy MIS; the result is ordered by right endpoint, which for
    /// pairwise-disjoint intervals is also `π`-order.
    pub(crate) fn mis_ordered(&self, w: &[VertexId]) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = Vec::new();
        for v in self.by_hi(w) {
            match out.last() {
                Some(&last) if self.intervals[v].lo <= self.intervals[last].hi => {}
                _ => out.push(v),
            }
        }
        out
    }

    /// Piercing on `w` given in `π`-order. Parts come out in pierce-point order.
    pub(crate) fn pierce_ordered(&self, w_pi: &[VertexId]) -> (Vec<Vec<VertexId>>, Vec<VertexId>) {
        let mut local: Vec<usize> = (0..w_pi.len()).collect();
        local.sort_unstable_by_key(|&i| self.hi_rank[w_pi[i]]);
        let mut assigned = vec![false; w_pi.len()];
        let mut next = 0;
        let mut parts = Vec::new();
        let mut chosen = Vec::new();
        for li in local {
            if assigned[li] {
                continue;
            }
            let point = self.intervals[w_pi[li]].hi;
            chosen.push(w_pi[li]);
            let mut part = Vec::new();
            // every unassigned interval starting by `point` ends at or after it
            while next < w_pi.len() && self.intervals[w_pi[next]].lo <= point {
                if !assigned[next] {
                    assigned[next] = true;
                    part.push(w_pi[next]);
                }
                next += 1;
            }
            parts.push(part);
        }
        (parts, chosen)
    }

    /// Separator split of `w` (given in `π`-order). `None` when `α(H[w]) < 2`.
    pub(crate) fn split_ordered(&self, w_pi: &[VertexId]) -> Option<SplitParts> {
        let mis = self.mis_ordered(w_pi);
        let k = mis.len();
        if k < 2 {
            return None;
        }
        // ⌊k/2⌋-th element, counting from one, and its successor in I
        let v_j = mis[k / 2 - 1];
        let v_jstar = mis[k / 2];
        let star_pos = self.pos[v_jstar];
        let star_lo = self.intervals[v_jstar].lo;
        let cut = w_pi.partition_point(|&u| self.pos[u] < star_pos);
        let (mut left, mut sep) = (Vec::new(), Vec::new());
        for &u in &w_pi[..cut] {
            if self.intervals[u].hi >= star_lo {
                sep.push(u);
            } else {
                left.push(u);
            }
        }
        Some(SplitParts {
            v_j,
            v_jstar,
            alpha: k,
            left,
            sep,
            right: w_pi[cut..].to_vec(),
        })
    }
}

impl<T: Coord> Adjacency for IntervalSupergraph<T> {
    fn order(&self) -> usize {
        self.n()
    }

    fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        u != v && self.intersects(u, v)
    }
}

/// Output of [`IntervalSupergraph::split_sets`].
///
/// `left` holds every `π`-predecessor of `v_{j*}` outside `N(v_{j*})`, `sep`
/// is `N(v_{j*})`, and `right` is `v_{j*}` with everything after it. The three
/// sets partition `w` and `left` is separated from `right`.
#[derive(Clone, Debug, PartialEq)]
pub struct Split {
    pub feasible: bool,
    /// The maximum independent set the split was taken from.
    pub independent: VertexSet,
    pub v_j: Option<VertexId>,
    pub v_jstar: Option<VertexId>,
    pub left: VertexSet,
    pub sep: VertexSet,
    pub right: VertexSet,
}

/// Same as [`Split`], with every list in `π`-order.
#[derive(Clone, Debug)]
pub(crate) struct SplitParts {
    pub v_j: VertexId,
    pub v_jstar: VertexId,
    pub alpha: usize,
    pub left: Vec<VertexId>,
    pub sep: Vec<VertexId>,
    pub right: Vec<VertexId>,
}
