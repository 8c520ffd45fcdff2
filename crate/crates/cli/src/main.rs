//! `cliquecover`: solve, verify, generate, and benchmark clique-cover
//! instances.
//!
//! Exit codes: 0 success, 1 verification failed, 2 bad input, 3 model
//! violation, 4 oracle size cap.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use cliquecover::format::{CertificateFile, InstanceFile};
use cliquecover::gen;
use cliquecover::pipeline::{self, Mode};
use cliquecover::Error;

#[derive(Parser)]
#[command(name = "cliquecover", version, about = "Certified clique covers for intersections of interval graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and write its certificate.
    Solve {
        input: PathBuf,
        /// Output path; standard output when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Skip contract checks and certificate verification.
        #[arg(long)]
        no_check: bool,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// Write a seeded random instance.
    Gen {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        coord_max: i64,
        /// Dimension for box instances.
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Exact α and β by exhaustive search (small instances only).
    Oracle {
        input: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Compare against this certificate.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Check a certificate against its instance.
    Verify { input: PathBuf, certificate: PathBuf },
    /// Time the solver on generated instances; CSV on standard output.
    Bench {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long, value_delimiter = ',', default_values_t = vec![1000, 2000, 4000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        seeds: u64,
        #[arg(long, default_value_t = 3)]
        repetitions: usize,
        /// Coordinates range over `0..=coord_factor·n`.
        #[arg(long, default_value_t = 10)]
        coord_factor: i64,
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Cor1,
    Cor2,
    Theorem1,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Cor1 => Mode::Cor1,
            ModeArg::Cor2 => Mode::Cor2,
            ModeArg::Theorem1 => Mode::Theorem1,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Rectangles,
    Boxes,
    Chords,
    Explicit,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SupergraphViolation { .. } | Error::Refused(_) => 3,
            Error::OracleCap { .. } => 4,
            Error::Contract(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure { code: 2, message: format!("{}: {e}", path.display()) })
}

fn write(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    let res = match out {
        Some(p) => fs::write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    res.map_err(|e| Failure { code: 2, message: format!("write failed: {e}") })
}

fn generate(kind: Kind, n: usize, seed: u64, coord_max: i64, dim: usize) -> Result<InstanceFile, Failure> {
    Ok(match kind {
        Kind::Rectangles => InstanceFile::from(&gen::random_rectangles(n, seed, coord_max)),
        Kind::Boxes => {
            if dim < 2 {
                return Err(Failure { code: 2, message: format!("box dimension must be at least 2, got {dim}") });
            }
            InstanceFile::from(&gen::random_boxes(n, dim, seed, coord_max))
        }
        Kind::Chords => InstanceFile::from(&gen::random_chords(n, seed)),
        Kind::Explicit => InstanceFile::from(&gen::random_explicit(n, seed, coord_max)),
    })
}

fn cmd_solve(input: &Path, out: Option<&Path>, no_check: bool, mode: Option<ModeArg>) -> CmdResult {
    let problem = InstanceFile::parse(&read(input)?)?.problem()?;
    let solved = pipeline::solve_problem(&problem, mode.map(Mode::from), !no_check)?;
    write(out, &solved.file().to_json())?;
    if let Some(r) = solved.report.as_ref().filter(|r| !r.passed()) {
        for f in &r.failures {
            eprintln!("verification: {f}");
        }
        return Ok(1);
    }
    Ok(0)
}

fn cmd_verify(input: &Path, certificate: &Path) -> CmdResult {
    let problem = InstanceFile::parse(&read(input)?)?.problem()?;
    let cert = CertificateFile::parse(&read(certificate)?)?;
    let report = pipeline::verify_file(&problem, &cert)?;
    let summary = serde_json::json!({
        "passed": report.passed(),
        "checks": {
            "partition": report.partition,
            "cliques": report.cliques,
            "independent": report.independent && report.weak_duality,
            "bound": report.bound,
        },
        "failures": report.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
    });
    write(None, &format!("{summary}\n"))?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_oracle(input: &Path, out: Option<&Path>, cert: Option<&Path>) -> CmdResult {
    let problem = InstanceFile::parse(&read(input)?)?.problem()?;
    let (_, g) = problem.build()?;
    let cert = cert.map(|p| read(p).and_then(|t| Ok(CertificateFile::parse(&t)?))).transpose()?;
    let report = pipeline::oracle_report(&g, cert.as_ref())?;
    write(out, &format!("{}\n", serde_json::to_string(&report).expect("report serializes")))?;
    Ok(0)
}

fn cmd_bench(kind: Kind, sizes: &[usize], seeds: u64, reps: usize, coord_factor: i64, dim: usize) -> CmdResult {
    println!("type,n,seeds,repetitions,median_ms,mean_cover,mean_independent,mean_bound,max_depth");
    for &n in sizes {
        let mut times = Vec::new();
        let (mut cover, mut ind, mut bound, mut depth) = (0.0, 0.0, 0.0, 0);
        for seed in 0..seeds {
            let problem = generate(kind, n, seed, coord_factor * n as i64, dim)?.problem()?;
            for _ in 0..reps.max(1) {
                let start = Instant::now();
                let solved = pipeline::solve_problem(&problem, None, false)?;
                times.push(start.elapsed().as_secs_f64() * 1e3);
                let c = &solved.certificate;
                cover += c.cover.len() as f64;
                ind += c.independent.len() as f64;
                bound += c.bound;
                depth = depth.max(c.stats.depth);
            }
        }
        times.sort_by(f64::total_cmp);
        let runs = times.len().max(1) as f64;
        let median = times.get(times.len() / 2).copied().unwrap_or(0.0);
        println!(
            "{},{n},{seeds},{reps},{median:.3},{:.2},{:.2},{:.2},{depth}",
            kind.to_possible_value().expect("named").get_name(),
            cover / runs,
            ind / runs,
            bound / runs
        );
    }
    Ok(0)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Solve { input, out, no_check, mode } => cmd_solve(&input, out.as_deref(), no_check, mode),
        Command::Gen { kind, n, seed, coord_max, dim, out } => {
            let file = generate(kind, n, seed, coord_max, dim)?;
            write(out.as_deref(), &file.to_json())?;
            Ok(0)
        }
        Command::Oracle { input, out, cert } => cmd_oracle(&input, out.as_deref(), cert.as_deref()),
        Command::Verify { input, certificate } => cmd_verify(&input, &certificate),
        Command::Bench { kind, sizes, seeds, repetitions, coord_factor, dim } => {
            cmd_bench(kind, &sizes, seeds, repetitions, coord_factor, dim)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
