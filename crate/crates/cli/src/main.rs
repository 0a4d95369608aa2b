//! `tdom`: batch front end for the tdom library.
//!
//! JSON reports go to stdout, human-readable notes to stderr. Exit status is
//! 0 on verified success, 1 when a verification check fails, 2 on bad input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tdom::counterexample::{build_counterexample, CounterexampleRecord};
use tdom::domination::min_domination;
use tdom::eh::{check_thresholds2, extract_clique_or_stable, extraction_target, SetKind};
use tdom::format::{parse_bipartite, parse_graph, parse_matrix, write_bipartite, write_graph, write_matrix};
use tdom::generate::{gen_perturbed, gen_stair, gen_t_restricted, gen_threshold, StairVariant};
use tdom::graph::patterns;
use tdom::induced::find_induced;
use tdom::matrix::{breadth, monotone_repair_bound, repair_matrix};
use tdom::oracle::{oracle_min_monotone_distance, oracle_min_threshold_distance};
use tdom::pipeline::{matrix_bound, repair_graph};
use tdom::recognize::{is_split, is_threshold};
use tdom::{matrix_local_difference, Error, Verify};

#[derive(Parser)]
#[command(name = "tdom", version, about = "Repair t-dominating graphs into threshold graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report domination level, recognition results and forbidden subgraphs.
    Analyze { graph: PathBuf },
    /// Repair a t-dominating graph into a threshold graph.
    Repair {
        graph: PathBuf,
        /// Domination level; defaults to the least t the graph satisfies.
        #[arg(long)]
        t: Option<usize>,
        /// Where to write the threshold graph.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "post", value_parser = parse_verify)]
        verify: Verify,
    },
    /// Repair a t-restricted 0/1 matrix into an inclusive one.
    Matrix {
        matrix: PathBuf,
        #[arg(long)]
        t: usize,
        /// Where to write the inclusive matrix.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "post", value_parser = parse_verify)]
        verify: Verify,
    },
    /// Generate a graph or matrix file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Destination file; stdout when omitted.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Build the tree counterexample and check its properties.
    Counterexample {
        #[arg(long)]
        k: usize,
        /// Also compute the exact distance to the nearest half-graph (k <= 2).
        #[arg(long)]
        oracle: bool,
        /// Where to write the bipartite graph.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the clique-or-stable-set bound for a graph excluding two threshold patterns.
    Bounds {
        #[arg(long)]
        h1: PathBuf,
        #[arg(long)]
        h2: PathBuf,
        #[arg(long)]
        g: PathBuf,
    },
    /// Extract a clique or stable set of size at least n/(4t+2).
    Extract {
        graph: PathBuf,
        /// Domination level; defaults to the least t the graph satisfies.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Exact distances by exhaustive search on small inputs.
    Oracle { kind: OracleKind, file: PathBuf },
}

#[derive(Subcommand)]
enum GenKind {
    /// Random threshold graph.
    Threshold {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Random threshold graph with at most d toggled pairs at each vertex.
    Perturbed {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Perturbed monotone staircase, 2d-restricted.
    TRestricted {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Padded staircase around the row 1..10..0.
    Stair {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        tweaked: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    /// Graph file: distance to the nearest threshold graph.
    Threshold,
    /// Matrix file: distance to the nearest monotone matrix.
    Monotone,
    /// Bipartite file: distance to the nearest half-graph.
    Halfgraph,
}

fn parse_verify(s: &str) -> Result<Verify, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Whether every verification check of a run passed.
enum Outcome {
    Verified,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Verified) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("tdom: {e}");
            ExitCode::from(if e.is_invariant() { 1 } else { 2 })
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, content: &str) -> Result<(), Error> {
    fs::write(path, content).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn emit<T: Serialize>(value: &T) -> Result<(), Error> {
    let json = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Invariant(format!("JSON encoding failed: {e}")))?;
    println!("{json}");
    Ok(())
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Outcome::Verified
    } else {
        Outcome::Failed
    }
}

#[derive(Serialize)]
struct Witnesses {
    #[serde(rename = "C4")]
    c4: Option<Vec<usize>>,
    #[serde(rename = "2K2")]
    two_k2: Option<Vec<usize>>,
    #[serde(rename = "P4")]
    p4: Option<Vec<usize>>,
    #[serde(rename = "C5")]
    c5: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct AnalyzeReport {
    n: usize,
    m: usize,
    min_domination: usize,
    is_threshold: bool,
    is_split: bool,
    forbidden_witnesses: Witnesses,
}

#[derive(Serialize)]
struct MatrixShape {
    m: usize,
    n: usize,
}

#[derive(Serialize)]
struct MatrixDiffs {
    to_reduced: usize,
    to_output: usize,
    total: usize,
}

#[derive(Serialize)]
struct MatrixBounds {
    reduce: u64,
    repair: u64,
    total: u64,
}

#[derive(Serialize)]
struct MatrixVerdicts {
    output_inclusive: bool,
    bounds_hold: bool,
}

#[derive(Serialize)]
struct MatrixReport {
    t: usize,
    w: usize,
    shape: MatrixShape,
    breadth: BreadthPair,
    stage_diffs: MatrixDiffs,
    bounds: MatrixBounds,
    verified: MatrixVerdicts,
}

#[derive(Serialize)]
struct BreadthPair {
    input: usize,
    reduced: usize,
}

#[derive(Serialize)]
struct ExtractReport {
    t: usize,
    n: usize,
    target: usize,
    kind: SetKind,
    size: usize,
    vertices: Vec<usize>,
}

#[derive(Serialize)]
struct OracleReport {
    kind: &'static str,
    distance: usize,
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Analyze { graph } => {
            let g = parse_graph(&read(&graph)?)?;
            let witness = |p| find_induced(&g, &p);
            emit(&AnalyzeReport {
                n: g.n(),
                m: g.edge_count(),
                min_domination: min_domination(&g),
                is_threshold: is_threshold(&g),
                is_split: is_split(&g),
                forbidden_witnesses: Witnesses {
                    c4: witness(patterns::c4())?,
                    two_k2: witness(patterns::two_k2())?,
                    p4: witness(patterns::p4())?,
                    c5: witness(patterns::c5())?,
                },
            })?;
            Ok(Outcome::Verified)
        }
        Command::Repair { graph, t, out, verify } => {
            let g = parse_graph(&read(&graph)?)?;
            let (h, report) = repair_graph(&g, t, verify)?;
            eprintln!(
                "t = {}, total local difference {} (bound {})",
                report.t, report.stage_diffs.total, report.bounds.total
            );
            if let Some(path) = out {
                write(&path, &write_graph(&h))?;
            }
            emit(&report)?;
            Ok(verdict(report.is_verified()))
        }
        Command::Matrix { matrix, t, out, verify } => {
            let a = parse_matrix(&read(&matrix)?)?;
            let repair = repair_matrix(&a, t, verify)?;
            let w = 4 * t;
            let to_reduced = matrix_local_difference(&a, &repair.reduced)?;
            let to_output = matrix_local_difference(&repair.reduced, &repair.output)?;
            let total = matrix_local_difference(&a, &repair.output)?;
            let bounds = MatrixBounds {
                reduce: w as u64,
                repair: if t == 0 { 0 } else { monotone_repair_bound(t, w) },
                total: matrix_bound(t),
            };
            let verified = MatrixVerdicts {
                output_inclusive: repair.output.is_inclusive(),
                bounds_hold: to_reduced as u64 <= bounds.reduce
                    && to_output as u64 <= bounds.repair
                    && total as u64 <= bounds.total,
            };
            eprintln!("t = {t}, total local difference {total} <= {}", bounds.total);
            if let Some(path) = out {
                write(&path, &write_matrix(&repair.output))?;
            }
            let ok = verified.output_inclusive && verified.bounds_hold;
            emit(&MatrixReport {
                t,
                w,
                shape: MatrixShape { m: a.m(), n: a.n() },
                breadth: BreadthPair { input: breadth(&a), reduced: breadth(&repair.reduced) },
                stage_diffs: MatrixDiffs { to_reduced, to_output, total },
                bounds,
                verified,
            })?;
            Ok(verdict(ok))
        }
        Command::Gen { kind, out } => {
            let text = match kind {
                GenKind::Threshold { n, seed } => write_graph(&gen_threshold(n, seed)),
                GenKind::Perturbed { n, d, seed } => write_graph(&gen_perturbed(&gen_threshold(n, seed), d, seed)),
                GenKind::TRestricted { m, n, d, seed } => write_matrix(&gen_t_restricted(m, n, d, seed)),
                GenKind::Stair { n, tweaked } => {
                    let variant = if tweaked { StairVariant::Tweaked } else { StairVariant::Plain };
                    write_matrix(&gen_stair(n, variant)?)
                }
            };
            match out {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(Outcome::Verified)
        }
        Command::Counterexample { k, oracle, out } => {
            let gk = build_counterexample(k)?;
            let record = CounterexampleRecord::new(&gk, oracle)?;
            if let Some(path) = out {
                write(&path, &write_bipartite(gk.graph()))?;
            }
            let ok = record.nested_t <= 1
                && record.degree_bounds_ok
                && record.pair_witnesses_ok
                && record.oracle_distance.is_none_or(|d| d >= k);
            emit(&record)?;
            Ok(verdict(ok))
        }
        Command::Bounds { h1, h2, g } => {
            let h1 = parse_graph(&read(&h1)?)?;
            let h2 = parse_graph(&read(&h2)?)?;
            let g = parse_graph(&read(&g)?)?;
            let report = check_thresholds2(&h1, &h2, &g)?;
            if report.holds.is_none() {
                eprintln!("premises not met; no verdict");
            }
            emit(&report)?;
            Ok(Outcome::Verified)
        }
        Command::Extract { graph, t } => {
            let g = parse_graph(&read(&graph)?)?;
            let t = t.unwrap_or_else(|| min_domination(&g));
            let found = extract_clique_or_stable(&g, t)?;
            emit(&ExtractReport {
                t,
                n: g.n(),
                target: extraction_target(g.n(), t),
                kind: found.kind,
                size: found.vertices.len(),
                vertices: found.vertices,
            })?;
            Ok(Outcome::Verified)
        }
        Command::Oracle { kind, file } => {
            let text = read(&file)?;
            let (kind, distance) = match kind {
                OracleKind::Threshold => ("threshold", oracle_min_threshold_distance(&parse_graph(&text)?)?),
                OracleKind::Monotone => ("monotone", oracle_min_monotone_distance(&parse_matrix(&text)?)?),
                OracleKind::Halfgraph => (
                    "halfgraph",
                    tdom::counterexample::oracle_min_halfgraph_distance(&parse_bipartite(&text)?)?,
                ),
            };
            emit(&OracleReport { kind, distance })?;
            Ok(Outcome::Verified)
        }
    }
}
