//! Clique covers and independent sets with a certified approximation ratio,
//! for graphs given as the intersection of interval graphs and one perfect
//! graph.
//!
//! The solver splits the vertex set around clique separators of an interval
//! supergraph, recurses on both sides, and hands each separator to a base
//! solver. The result is a [`CoverCertificate`]: a clique partition `C`, an
//! independent set `I`, and a bound on `|C|` in terms of `|I|` that can be
//! checked independently with [`verify_certificate`].
//!
//! Geometry is generic over the coordinate type ([`Coord`]); the aliases at
//! the crate root fix it to `i64` (exact, used by the file formats) or `f64`.
//!
//! ```
//! use cliquecover::{solve_cor1, verify_certificate, RectangleInstance, SolveOptions};
//!
//! let rects = RectangleInstance::new(&[[0, 4, 0, 4], [2, 6, 1, 3], [10, 12, 0, 9]])?;
//! let model = rects.model();
//! let cert = solve_cor1(&model, SolveOptions::default())?;
//! assert!(cert.cover.len() as f64 <= cert.bound);
//! assert!(verify_certificate(&model, &cert).passed());
//! # Ok::<(), cliquecover::Error>(())
//! ```

pub mod cover;
pub mod error;
pub mod format;
pub mod frontend;
pub mod gen;
pub mod graph;
pub mod interval;
pub mod oracle;
pub mod pipeline;
pub mod poset;
pub mod scalar;

pub use cover::{
    bound_value, solve_cor1, solve_cor2, solve_theorem1, verify_certificate, BaseSolution, BaseSolver, CliqueCover,
    CoverCertificate, Failure, GreedyBase, MirskyBase, PierceBase, SolveOptions, SolveStats, SplitRecord,
    VerificationReport,
};
pub use error::{Error, Result};
pub use format::{CertificateFile, InstanceData, InstanceFile, Problem};
pub use graph::{Adjacency, AdjacencyGraph, InducedSubgraph, VertexId, VertexSet};
pub use interval::{canonical_order, Split};
pub use oracle::{exact_alpha, exact_beta, exact_phi_small, OracleLimit, PhiMode, PhiValue};
pub use poset::Poset;
pub use scalar::{BoundReal, Coord};

/// Exact ratio type returned by the `φ` oracle.
pub type Phi = num_rational::Ratio<usize>;

pub type Interval = interval::Interval<i64>;
pub type IntervalSupergraph = interval::IntervalSupergraph<i64>;
pub type PerfectBase = cover::PerfectBase<i64>;
pub type IntersectionModel = cover::IntersectionModel<i64>;
pub type RectangleInstance = frontend::RectangleInstance<i64>;
pub type BoxInstance = frontend::BoxInstance<i64>;
pub type ChordInstance = frontend::ChordInstance<i64>;
pub type ExplicitInstance = frontend::ExplicitInstance<i64>;

pub type IntervalF64 = interval::Interval<f64>;
pub type IntervalSupergraphF64 = interval::IntervalSupergraph<f64>;
pub type IntersectionModelF64 = cover::IntersectionModel<f64>;
pub type RectangleInstanceF64 = frontend::RectangleInstance<f64>;
pub type BoxInstanceF64 = frontend::BoxInstance<f64>;
