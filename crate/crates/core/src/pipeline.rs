//! Instance in, certificate out: the glue shared by the command line and
//! the test suites.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cover::{
    solve_cor1, solve_cor2, solve_theorem1, verify_certificate, CoverCertificate, Failure, GreedyBase,
    IntersectionModel, SolveOptions, VerificationReport,
};
use crate::error::{Error, Result};
use crate::format::{CertificateFile, Problem};
use crate::graph::AdjacencyGraph;
use crate::oracle::{exact_alpha, exact_beta};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// One interval layer over a perfect base.
    Cor1,
    /// Any number of interval layers over a perfect base.
    Cor2,
    /// First interval layer over the explicit graph, greedy base solver.
    Theorem1,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cor1" => Ok(Mode::Cor1),
            "cor2" => Ok(Mode::Cor2),
            "theorem1" => Ok(Mode::Theorem1),
            _ => Err(Error::Input(format!("unknown mode {s:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Cor1 => "cor1",
            Mode::Cor2 => "cor2",
            Mode::Theorem1 => "theorem1",
        })
    }
}

pub fn default_mode(model: &IntersectionModel<i64>) -> Mode {
    if !model.exact_intersection() {
        Mode::Theorem1
    } else if model.layers().len() == 1 {
        Mode::Cor1
    } else {
        Mode::Cor2
    }
}

#[derive(Clone, Debug)]
pub struct Solved {
    pub mode: Mode,
    pub certificate: CoverCertificate,
    pub report: Option<VerificationReport>,
}

impl Solved {
    pub fn passed(&self) -> bool {
        self.report.as_ref().is_none_or(|r| r.passed())
    }

    pub fn file(&self) -> CertificateFile {
        CertificateFile::new(&self.certificate, self.report.as_ref())
    }
}

/// Solves and, when `check` is set, verifies against the explicit graph.
pub fn solve_problem(problem: &Problem, mode: Option<Mode>, check: bool) -> Result<Solved> {
    let opts = if check { SolveOptions::default() } else { SolveOptions::unchecked() };
    let needs_graph = check || matches!(problem, Problem::Explicit(_)) || mode == Some(Mode::Theorem1);
    let (model, graph) = if needs_graph {
        let (m, g) = problem.build()?;
        (m, Some(g))
    } else {
        (problem.model()?, None)
    };
    let mode = mode.unwrap_or_else(|| default_mode(&model));
    let certificate = match mode {
        Mode::Cor1 => solve_cor1(&model, opts)?,
        Mode::Cor2 => solve_cor2(&model, opts)?,
        Mode::Theorem1 => {
            let g = graph.as_ref().expect("graph built for theorem mode");
            let h = model
                .first_interval_layer()
                .ok_or_else(|| Error::Refused("theorem mode needs an interval layer".into()))?;
            solve_theorem1(g, h, &mut GreedyBase(g), opts)?
        }
    };
    let report = if check { graph.as_ref().map(|g| verify_certificate(g, &certificate)) } else { None };
    Ok(Solved { mode, certificate, report })
}

/// Checks a certificate file against an instance. The layer `α` values are
/// recomputed from the instance rather than trusted.
pub fn verify_file(problem: &Problem, file: &CertificateFile) -> Result<VerificationReport> {
    let (model, g) = problem.build()?;
    let cert = file.certificate();
    let mut report = verify_certificate(&g, &cert);
    let expected = if cert.t == model.t() {
        Some(model.alphas())
    } else if cert.t == 2 {
        model.first_interval_layer().map(|h| vec![h.alpha()])
    } else {
        None
    };
    if expected.as_ref() != Some(&cert.alphas) {
        report.bound = false;
        report.failures.push(Failure::BoundMismatch { stated: cert.bound, recomputed: f64::NAN });
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleReport {
    pub v: u32,
    pub n: usize,
    pub alpha: usize,
    pub alpha_witness: Vec<usize>,
    pub beta: usize,
    pub beta_witness: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cert: Option<CertComparison>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertComparison {
    pub cover_size: usize,
    pub independent_size: usize,
    /// `|C| / β(G)`.
    pub ratio: f64,
    /// `|I| ≤ α ≤ β ≤ |C|`.
    pub sandwich: bool,
}

pub fn oracle_report(g: &AdjacencyGraph, cert: Option<&CertificateFile>) -> Result<OracleReport> {
    let (alpha, aw) = exact_alpha(g)?;
    let (beta, bw) = exact_beta(g)?;
    let cert = cert.map(|c| {
        let cs = c.cover.len();
        let is = c.independent.len();
        CertComparison {
            cover_size: cs,
            independent_size: is,
            ratio: if beta == 0 { 1.0 } else { cs as f64 / beta as f64 },
            sandwich: is <= alpha && alpha <= beta && beta <= cs,
        }
    });
    Ok(OracleReport {
        v: crate::format::FORMAT_VERSION,
        n: g.n(),
        alpha,
        alpha_witness: aw.into_vec(),
        beta,
        beta_witness: bw.parts().iter().map(|p| p.as_slice().to_vec()).collect(),
        cert,
    })
}
