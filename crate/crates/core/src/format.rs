//! JSON instance and certificate files.

use serde::{Deserialize, Serialize};

use crate::cover::{CliqueCover, CoverCertificate, IntersectionModel, SolveStats, VerificationReport};
use crate::error::{Error, Result};
use crate::frontend::{explicit_to_model, BoxInstance, ChordInstance, ExplicitInstance, RectangleInstance};
use crate::graph::{AdjacencyGraph, VertexSet};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub v: u32,
    #[serde(flatten)]
    pub data: InstanceData,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum InstanceData {
    Rectangles {
        rects: Vec<[i64; 4]>,
    },
    Boxes {
        dim: usize,
        boxes: Vec<Vec<i64>>,
    },
    Chords {
        chords: Vec<[i64; 2]>,
    },
    Explicit {
        n: usize,
        layers: Vec<Vec<[i64; 2]>>,
        #[serde(default)]
        poset: Option<Vec<[usize; 2]>>,
        #[serde(default)]
        g_edges: Option<Vec<[usize; 2]>>,
    },
}

/// A parsed and validated instance.
#[derive(Clone, Debug, PartialEq)]
pub enum Problem {
    Rectangles(RectangleInstance<i64>),
    Boxes(BoxInstance<i64>),
    Chords(ChordInstance<i64>),
    Explicit(ExplicitInstance<i64>),
}

fn pairs<T: Copy>(v: &[[T; 2]]) -> Vec<(T, T)> {
    v.iter().map(|p| (p[0], p[1])).collect()
}

impl InstanceFile {
    pub fn new(data: InstanceData) -> Self {
        InstanceFile { v: FORMAT_VERSION, data }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: InstanceFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        if file.v != FORMAT_VERSION {
            return Err(Error::Format(format!("unsupported version {}", file.v)));
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("instances serialize");
        s.push('\n');
        s
    }

    pub fn kind(&self) -> &'static str {
        match self.data {
            InstanceData::Rectangles { .. } => "rectangles",
            InstanceData::Boxes { .. } => "boxes",
            InstanceData::Chords { .. } => "chords",
            InstanceData::Explicit { .. } => "explicit",
        }
    }

    pub fn problem(&self) -> Result<Problem> {
        Ok(match &self.data {
            InstanceData::Rectangles { rects } => Problem::Rectangles(RectangleInstance::new(rects)?),
            InstanceData::Boxes { dim, boxes } => Problem::Boxes(BoxInstance::new(*dim, boxes)?),
            InstanceData::Chords { chords } => Problem::Chords(ChordInstance::new(&pairs(chords))?),
            InstanceData::Explicit { n, layers, poset, g_edges } => Problem::Explicit(ExplicitInstance {
                n: *n,
                layers: layers.iter().map(|l| pairs(l)).collect(),
                poset: poset.as_deref().map(pairs),
                g_edges: g_edges.as_deref().map(pairs),
            }),
        })
    }
}

impl From<&RectangleInstance<i64>> for InstanceFile {
    fn from(r: &RectangleInstance<i64>) -> Self {
        InstanceFile::new(InstanceData::Rectangles { rects: r.rows() })
    }
}

impl From<&BoxInstance<i64>> for InstanceFile {
    fn from(b: &BoxInstance<i64>) -> Self {
        InstanceFile::new(InstanceData::Boxes { dim: b.dim(), boxes: b.rows() })
    }
}

impl From<&ChordInstance<i64>> for InstanceFile {
    fn from(c: &ChordInstance<i64>) -> Self {
        InstanceFile::new(InstanceData::Chords { chords: c.chords().iter().map(|&(a, b)| [a, b]).collect() })
    }
}

impl From<&ExplicitInstance<i64>> for InstanceFile {
    fn from(e: &ExplicitInstance<i64>) -> Self {
        let arr = |v: &[(usize, usize)]| v.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>();
        InstanceFile::new(InstanceData::Explicit {
            n: e.n,
            layers: e.layers.iter().map(|l| l.iter().map(|&(a, b)| [a, b]).collect()).collect(),
            poset: e.poset.as_deref().map(arr),
            g_edges: e.g_edges.as_deref().map(arr),
        })
    }
}

impl Problem {
    pub fn n(&self) -> usize {
        match self {
            Problem::Rectangles(r) => r.len(),
            Problem::Boxes(b) => b.len(),
            Problem::Chords(c) => c.len(),
            Problem::Explicit(e) => e.n,
        }
    }

    /// The model alone, skipping the `O(n²)` adjacency where possible.
    pub fn model(&self) -> Result<IntersectionModel<i64>> {
        Ok(match self {
            Problem::Rectangles(r) => r.model(),
            Problem::Boxes(b) => b.model(),
            Problem::Chords(c) => c.model(),
            Problem::Explicit(e) => explicit_to_model(e)?.0,
        })
    }

    pub fn build(&self) -> Result<(IntersectionModel<i64>, AdjacencyGraph)> {
        Ok(match self {
            Problem::Rectangles(r) => crate::frontend::rectangles_to_model(r),
            Problem::Boxes(b) => crate::frontend::boxes_to_model(b),
            Problem::Chords(c) => crate::frontend::chords_to_model(c),
            Problem::Explicit(e) => explicit_to_model(e)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub partition: bool,
    pub cliques: bool,
    pub independent: bool,
    pub bound: bool,
}

impl From<&VerificationReport> for Checks {
    fn from(r: &VerificationReport) -> Self {
        Checks {
            partition: r.partition,
            cliques: r.cliques,
            independent: r.independent && r.weak_duality,
            bound: r.bound,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub v: u32,
    pub cover: Vec<Vec<usize>>,
    pub independent: Vec<usize>,
    pub alphas: Vec<usize>,
    pub t: usize,
    pub phi: f64,
    pub bound: f64,
    pub stats: SolveStats,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Checks>,
}

impl CertificateFile {
    pub fn new(cert: &CoverCertificate, report: Option<&VerificationReport>) -> Self {
        CertificateFile {
            v: FORMAT_VERSION,
            cover: cert.cover.parts().iter().map(|p| p.as_slice().to_vec()).collect(),
            independent: cert.independent.as_slice().to_vec(),
            alphas: cert.alphas.clone(),
            t: cert.t,
            phi: cert.phi,
            bound: cert.bound,
            stats: cert.stats,
            checks: report.map(Checks::from),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: CertificateFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        if file.v != FORMAT_VERSION {
            return Err(Error::Format(format!("unsupported version {}", file.v)));
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("certificates serialize");
        s.push('\n');
        s
    }

    /// Back to an in-memory certificate. Duplicate ids inside one part are
    /// merged; duplicates across parts survive for the verifier to report.
    pub fn certificate(&self) -> CoverCertificate {
        CoverCertificate {
            cover: CliqueCover::new(self.cover.iter().map(|p| VertexSet::from_iter_dedup(p.iter().copied())).collect()),
            independent: VertexSet::from_iter_dedup(self.independent.iter().copied()),
            alphas: self.alphas.clone(),
            t: self.t,
            phi: self.phi,
            bound: self.bound,
            stats: self.stats,
            trace: Vec::new(),
        }
    }
}
