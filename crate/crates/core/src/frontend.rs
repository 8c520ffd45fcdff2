//! Reductions from geometric and explicit inputs to [`IntersectionModel`]s,
//! each paired with the explicit graph `G` for validation.

use crate::cover::{IntersectionModel, PerfectBase};
use crate::error::{Error, Result};
use crate::graph::{AdjacencyGraph, VertexId};
use crate::interval::{Interval, IntervalSupergraph};
use crate::poset::Poset;
use crate::scalar::Coord;

/// Closed axis-parallel box in `t ≥ 2` dimensions.
#[derive(Clone, Debug, PartialEq)]
pub struct Boxed<T> {
    axes: Vec<Interval<T>>,
}

impl<T: Coord> Boxed<T> {
    /// From `[lo_1, hi_1, ..., lo_t, hi_t]`.
    pub fn from_flat(coords: &[T]) -> Result<Self> {
        if !coords.len().is_multiple_of(2) {
            return Err(Error::Input(format!("box has {} coordinates, expected an even count", coords.len())));
        }
        let axes = coords.chunks(2).map(|c| Interval::new(c[0], c[1])).collect::<Result<_>>()?;
        Ok(Boxed { axes })
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn axis(&self, i: usize) -> &Interval<T> {
        &self.axes[i]
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.axes.iter().zip(&other.axes).all(|(a, b)| a.intersects(b))
    }
}

/// Axis-parallel rectangles `[x_lo, x_hi] × [y_lo, y_hi]`.
#[derive(Clone, Debug, PartialEq)]
pub struct RectangleInstance<T> {
    rects: Vec<Boxed<T>>,
}

impl<T: Coord> RectangleInstance<T> {
    /// From rows `[x_lo, x_hi, y_lo, y_hi]`.
    pub fn new(rects: &[[T; 4]]) -> Result<Self> {
        let rects = rects.iter().map(|r| Boxed::from_flat(r)).collect::<Result<_>>()?;
        Ok(RectangleInstance { rects })
    }

    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn rows(&self) -> Vec<[T; 4]> {
        self.rects
            .iter()
            .map(|r| [r.axis(0).lo(), r.axis(0).hi(), r.axis(1).lo(), r.axis(1).hi()])
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    pub fn intersects(&self, i: VertexId, j: VertexId) -> bool {
        self.rects[i].intersects(&self.rects[j])
    }

    /// x-intervals as the interval layer, y-intervals as the (perfect) base.
    pub fn model(&self) -> IntersectionModel<T> {
        axis_model(&self.rects, 2)
    }

    pub fn adjacency(&self) -> AdjacencyGraph {
        AdjacencyGraph::from_predicate(self.len(), |i, j| self.intersects(i, j))
    }
}

pub fn rectangles_to_model<T: Coord>(r: &RectangleInstance<T>) -> (IntersectionModel<T>, AdjacencyGraph) {
    (r.model(), r.adjacency())
}

/// Boxes in `R^t`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoxInstance<T> {
    dim: usize,
    boxes: Vec<Boxed<T>>,
}

impl<T: Coord> BoxInstance<T> {
    pub fn new(dim: usize, boxes: &[Vec<T>]) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Input(format!("box dimension must be at least 2, got {dim}")));
        }
        let boxes = boxes
            .iter()
            .map(|b| {
                if b.len() != 2 * dim {
                    return Err(Error::Input(format!("box has {} coordinates, expected {}", b.len(), 2 * dim)));
                }
                Boxed::from_flat(b)
            })
            .collect::<Result<_>>()?;
        Ok(BoxInstance { dim, boxes })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.boxes.iter().map(|b| b.axes.iter().flat_map(|a| [a.lo(), a.hi()]).collect()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn intersects(&self, i: VertexId, j: VertexId) -> bool {
        self.boxes[i].intersects(&self.boxes[j])
    }

    /// Axes `1..t−1` as interval layers, axis `t` as the base.
    pub fn model(&self) -> IntersectionModel<T> {
        axis_model(&self.boxes, self.dim)
    }

    pub fn adjacency(&self) -> AdjacencyGraph {
        AdjacencyGraph::from_predicate(self.len(), |i, j| self.intersects(i, j))
    }
}

pub fn boxes_to_model<T: Coord>(b: &BoxInstance<T>) -> (IntersectionModel<T>, AdjacencyGraph) {
    (b.model(), b.adjacency())
}

fn axis_model<T: Coord>(boxes: &[Boxed<T>], dim: usize) -> IntersectionModel<T> {
    let axis = |a: usize| IntervalSupergraph::new(boxes.iter().map(|b| *b.axis(a)).collect());
    let layers = (0..dim - 1).map(axis).collect();
    IntersectionModel::new(layers, PerfectBase::Interval(axis(dim - 1))).expect("all axes have one interval per box")
}

/// Chord diagram with distinct endpoints, each chord stored with `a < b`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChordInstance<T> {
    chords: Vec<(T, T)>,
}

impl<T: Coord> ChordInstance<T> {
    pub fn new(chords: &[(T, T)]) -> Result<Self> {
        let chords: Vec<(T, T)> = chords.iter().map(|&(a, b)| if b < a { (b, a) } else { (a, b) }).collect();
        let mut ends: Vec<T> = Vec::with_capacity(2 * chords.len());
        for &(a, b) in &chords {
            if a.partial_cmp(&b) != Some(std::cmp::Ordering::Less) {
                return Err(Error::Input(format!("degenerate chord ({a},{b})")));
            }
            ends.push(a);
            ends.push(b);
        }
        ends.sort_by(|x, y| x.total_cmp(y));
        if let Some(w) = ends.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Input(format!("duplicate chord endpoint {}", w[0])));
        }
        Ok(ChordInstance { chords })
    }

    pub fn chords(&self) -> &[(T, T)] {
        &self.chords
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    /// Chords cross iff their endpoints interleave.
    pub fn crosses(&self, i: VertexId, j: VertexId) -> bool {
        let (a, b) = self.chords[i];
        let (c, d) = self.chords[j];
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }

    /// Interval layer of chord spans; base is the strict-containment poset.
    pub fn model(&self) -> IntersectionModel<T> {
        let spans: Vec<Interval<T>> =
            self.chords.iter().map(|&(a, b)| Interval::new(a, b).expect("normalized chord")).collect();
        let mut inside = Vec::new();
        for (i, x) in spans.iter().enumerate() {
            for (j, y) in spans.iter().enumerate() {
                if x.strictly_inside(y) {
                    inside.push((i, j));
                }
            }
        }
        let poset = Poset::close_transitively(spans.len(), &inside).expect("containment is acyclic");
        IntersectionModel::new(vec![IntervalSupergraph::new(spans)], PerfectBase::Poset(poset))
            .expect("one span per chord")
    }

    pub fn adjacency(&self) -> AdjacencyGraph {
        AdjacencyGraph::from_predicate(self.len(), |i, j| self.crosses(i, j))
    }
}

pub fn chords_to_model<T: Coord>(c: &ChordInstance<T>) -> (IntersectionModel<T>, AdjacencyGraph) {
    (c.model(), c.adjacency())
}

/// Interval layers with an optional poset base and an optional explicit `G`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExplicitInstance<T> {
    pub n: usize,
    pub layers: Vec<Vec<(T, T)>>,
    pub poset: Option<Vec<(VertexId, VertexId)>>,
    pub g_edges: Option<Vec<(VertexId, VertexId)>>,
}

/// Without `g_edges`, `G` is the conjunction of the layers. With them, each
/// layer must contain every edge of `G` and the model is flagged as
/// supergraph-only. Without a poset the last interval layer is the base.
pub fn explicit_to_model<T: Coord>(e: &ExplicitInstance<T>) -> Result<(IntersectionModel<T>, AdjacencyGraph)> {
    let mut layers = Vec::with_capacity(e.layers.len());
    for (i, l) in e.layers.iter().enumerate() {
        if l.len() != e.n {
            return Err(Error::LayerSize { layer: i + 1, got: l.len(), expected: e.n });
        }
        layers.push(IntervalSupergraph::from_pairs(l)?);
    }
    let base = match &e.poset {
        Some(rel) => PerfectBase::Poset(Poset::close_transitively(e.n, rel)?),
        None => match layers.pop() {
            Some(last) => PerfectBase::Interval(last),
            None => return Err(Error::Input("instance needs at least one layer or a poset".into())),
        },
    };
    let model = IntersectionModel::new(layers, base)?;

    match &e.g_edges {
        None => {
            let g = model.conjunction_graph();
            Ok((model, g))
        }
        Some(edges) => {
            let g = AdjacencyGraph::from_edges(e.n, edges)?;
            for (u, v) in g.edges() {
                if let Some(i) = model.layers().iter().position(|l| !l.intersects(u, v)) {
                    return Err(Error::SupergraphViolation { u, v, layer: i + 1 });
                }
                if !crate::graph::Adjacency::adjacent(model.base(), u, v) {
                    return Err(Error::SupergraphViolation { u, v, layer: model.t() });
                }
            }
            Ok((model.into_supergraph_mode(), g))
        }
    }
}
