use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use dsq::search::{run_cospectral_search, write_csv, GraphClass, SearchParams};
use dsq::spec::GraphSpec;
use dsq::suites::{run_suite_report, Suite, SuiteParams};
use dsq_core::graph::graph6;
use dsq_core::invariants::{degree_moment_sums, derive_basic_invariants, solve_degree_distribution, DegreeSystem};
use dsq_core::spectral::{char_poly, eigenvalues_float, DEFAULT_TOLERANCE};
use dsq_core::walks::{census_of, lemma7_value};
use dsq_core::{IntSymMatrix, MatrixKind};
use serde::Serialize;

/// Exact spectral checks around the Laplacian spectral characterization of centipedes.
#[derive(Parser)]
#[command(name = "dsq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph from a builder spec as graph6.
    Build {
        /// `family:size`, `kinv-path:t`, or graph6
        graph: GraphSpec,
        /// Print the edge list instead of graph6.
        #[arg(long)]
        edges: bool,
    },
    /// Exact characteristic polynomial, optionally with float eigenvalues.
    Spectrum {
        graph: GraphSpec,
        #[arg(long, default_value = "laplacian")]
        matrix: MatrixKind,
        #[arg(long)]
        float: bool,
    },
    /// What the Laplacian polynomial alone determines about the graph.
    Invariants {
        graph: GraphSpec,
        /// Triangle count for the cubic degree moment; deduced when the
        /// spectrum is that of a tree.
        #[arg(long)]
        triangles: Option<u64>,
        #[arg(long, default_value_t = 5)]
        dmax: usize,
    },
    /// Motif census of a triangle chain against the closed forms.
    Census { graph: GraphSpec },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        /// Tree orders, `N` or `A..B`
        #[arg(long, value_parser = parse_range)]
        n: Option<RangeInclusive<usize>>,
        /// Triangle counts, `N` or `A..B`
        #[arg(long, value_parser = parse_range)]
        t: Option<RangeInclusive<usize>>,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        corpus_size: usize,
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// graph6 file for the all-graphs suite
        #[arg(long)]
        stream: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Group a class of graphs by exact characteristic polynomial.
    Search {
        /// `trees`, `tchains` or `g6:<path>`
        #[arg(long)]
        class: GraphClass,
        #[arg(long, value_parser = parse_range)]
        n: Option<RangeInclusive<usize>>,
        /// Alias of `--n` for triangle chains.
        #[arg(long, value_parser = parse_range, conflicts_with = "n")]
        t: Option<RangeInclusive<usize>>,
        #[arg(long, default_value = "laplacian")]
        matrix: MatrixKind,
        /// Repeatable; an unsized family gets one target per order.
        #[arg(long)]
        target: Vec<GraphSpec>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Report malformed graph6 lines and continue.
        #[arg(long)]
        skip_bad: bool,
        /// Keep every class member, not just two witnesses.
        #[arg(long)]
        all_members: bool,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("`{s}` is not N or A..B");
    match s.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.parse().map_err(|_| bad())?;
            let b: usize = b.trim_start_matches('=').parse().map_err(|_| bad())?;
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok(a..=b)
        }
        None => s.parse().map(|n| n..=n).map_err(|_| bad()),
    }
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    let mut w = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("dsq: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` means the command ran but something it checked failed.
fn run(cli: Cli) -> Result<bool> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Build { graph, edges } => {
            let g = graph.resolve(None)?;
            if edges {
                writeln!(out, "{} {}", g.order(), g.size())?;
                for (u, v) in g.edges() {
                    writeln!(out, "{u} {v}")?;
                }
            } else {
                writeln!(out, "{}", graph6::encode(&g))?;
            }
        }
        Command::Spectrum { graph, matrix, float } => {
            let g = graph.resolve(None)?;
            let m = IntSymMatrix::of(&g, matrix);
            writeln!(out, "{}", char_poly(&m))?;
            if float {
                let s = eigenvalues_float(&m, DEFAULT_TOLERANCE)?;
                let shown: Vec<String> = s.values.iter().map(|x| format!("{:.10}", x + 0.0)).collect();
                writeln!(out, "{}", shown.join(" "))?;
            }
        }
        Command::Invariants { graph, triangles, dmax } => {
            let g = graph.resolve(None)?;
            let p = char_poly(&IntSymMatrix::of(&g, MatrixKind::Laplacian));
            let basic = derive_basic_invariants(&p)?;
            writeln!(out, "laplacian polynomial: {p}")?;
            writeln!(
                out,
                "vertices {}, edges {}, components {}, spanning trees {}",
                basic.order, basic.edges, basic.components, basic.spanning_trees
            )?;
            let is_tree = basic.components == 1 && basic.edges + 1 == basic.order;
            let Some(tri) = triangles.or(is_tree.then_some(0)) else {
                writeln!(out, "pass --triangles to get the cubic moment and degree distributions")?;
                return Ok(true);
            };
            let moments = degree_moment_sums(&p, tri)?;
            writeln!(out, "sum d^2 = {}, sum d^3 = {} (triangles {tri})", moments.s2, moments.s3)?;
            let sys = DegreeSystem::from_spectrum(&basic, &moments, dmax)?;
            let sols = solve_degree_distribution(&sys);
            writeln!(out, "{} degree distribution(s) n_0..n_{dmax}:", sols.len())?;
            for d in sols {
                writeln!(out, "  {:?}", d.counts())?;
            }
        }
        Command::Census { graph } => {
            let g = graph.resolve(None)?;
            let report = census_of(&g)?;
            let p = report.profile;
            writeln!(out, "triangles {}, clique-tree degrees: {} x1, {} x2, {} x3", p.t, p.t1, p.t2, p.t3)?;
            writeln!(out, "motif counts (T, T1, T2, T3, T4): {:?}", report.observed.0)?;
            writeln!(out, "closed forms:                    {:?}", report.predicted.0)?;
            let trace = IntSymMatrix::of(&g, MatrixKind::Adjacency).power_traces(7).swap_remove(7);
            write!(out, "tr(A^7) = {trace}")?;
            match lemma7_value(p.t, p.t3) {
                Ok(v) => writeln!(out, ", formula gives {v}")?,
                Err(_) => writeln!(out)?,
            }
        }
        Command::Verify {
            suite,
            n,
            t,
            seed,
            corpus_size,
            samples,
            workers,
            stream,
            json,
        } => {
            let params = SuiteParams {
                n,
                t,
                seed,
                corpus_size,
                samples,
                workers,
                stream,
            };
            let report = run_suite_report(suite, &params)?;
            for c in &report.checks {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {}: expected {}; got {}", c.id, c.expected, c.actual)?;
                if let Some(w) = &c.witness {
                    writeln!(out, "     witness {w}")?;
                }
            }
            let failed = report.checks.iter().filter(|c| !c.passed()).count();
            writeln!(out, "{} checks, {failed} failed, {} ms", report.checks.len(), report.elapsed_ms)?;
            if let Some(path) = json {
                write_json(&path, &report)?;
            }
            return Ok(failed == 0);
        }
        Command::Search {
            class,
            n,
            t,
            matrix,
            target,
            workers,
            json,
            csv,
            skip_bad,
            all_members,
        } => {
            let orders = n.or(t);
            if orders.is_none() && !matches!(class, GraphClass::Graph6(_)) {
                bail!("--n (or --t) is required for class {class}");
            }
            let mut params = SearchParams::new(class, orders, matrix);
            params.targets = target;
            params.workers = workers;
            params.skip_bad = skip_bad;
            params.list_members = all_members;
            let report = run_cospectral_search(&params)?;
            let shared = report.classes.iter().filter(|c| c.size > 1).count();
            writeln!(
                out,
                "{} graphs scanned, {} {} classes, {} shared, {} ms",
                report.scanned,
                report.classes.len(),
                report.matrix,
                shared,
                report.elapsed_ms
            )?;
            for s in &report.skipped {
                writeln!(out, "skipped line {} (byte {}): {}", s.line, s.offset, s.message)?;
            }
            for tr in &report.targets {
                let verdict = if tr.determined { "determined" } else { "has mates" };
                writeln!(out, "target {} (n={}): class size {}, {verdict}", tr.graph6, tr.order, tr.class_size)?;
                for m in &tr.mates {
                    writeln!(out, "  mate {m}")?;
                }
            }
            if let Some(path) = json {
                write_json(&path, &report)?;
            }
            if let Some(path) = csv {
                let file = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                write_csv(&report, file)?;
            }
        }
    }
    Ok(true)
}
