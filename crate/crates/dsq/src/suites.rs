//! Named verification suites. Each suite runs a family of exact checks and
//! reports one [`CheckResult`] per parameter value, with the graph6 string
//! of the first failing graph when there is one.

use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use dsq_core::families::{contains_obstruction_h, enumerate_trees, is_centipede, k_inverse, triangle_chains};
use dsq_core::graph::{centipede, count_subgraphs, graph6, path};
use dsq_core::invariants::{
    check_spectral_bounds, complement_spectrum, degree_moment_sums, derive_basic_invariants,
    solve_degree_distribution, DegreeDistribution, DegreeSystem,
};
use dsq_core::spectral::{adjacency_poly, determinant, laplacian_poly};
use dsq_core::walks::{census_of, covering_walk_count, lemma7_value, walk_decomposition_residual};
use dsq_core::{Graph, IntSymMatrix, MatrixKind, Motif};
use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{random_graphs, random_trees};
use crate::search::{run_cospectral_search, GraphClass, SearchError, SearchParams};
use crate::spec::GraphSpec;

/// Closed 7-walk counts of the five motifs, as stated.
pub const W7_STATED: [u64; 5] = [126, 84, 28, 14, 14];

/// Row `i`: how many copies of each motif sit inside motif `i`, as stated in
/// the trace equations `tr(A_i^7) = Σ_j c_ij w_7(M_j)`.
pub const TRACE_EQUATIONS: [[u64; 5]; 5] = [
    [1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0],
    [1, 2, 1, 0, 0],
    [1, 2, 0, 1, 0],
    [1, 1, 0, 0, 1],
];

pub const MAX_SUITE_TREE_ORDER: usize = 20;
pub const MAX_SUITE_TRIANGLES: usize = 10;
pub const MAX_CORPUS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    /// graph6 of the first graph that failed.
    pub witness: Option<String>,
}

impl CheckResult {
    fn compare<T: PartialEq + fmt::Display>(id: String, expected: T, actual: T, witness: Option<&Graph>) -> Self {
        let ok = expected == actual;
        CheckResult {
            id,
            status: if ok { Status::Pass } else { Status::Fail },
            expected: expected.to_string(),
            actual: actual.to_string(),
            witness: if ok { None } else { witness.map(graph6::encode) },
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// What `dsq verify --json` writes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub version: String,
    pub suite: String,
    pub params: SuiteParamsRecord,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteParamsRecord {
    pub n: Option<(usize, usize)>,
    pub t: Option<(usize, usize)>,
    pub seed: u64,
    pub corpus_size: usize,
    pub samples: usize,
    pub stream: Option<String>,
}

impl From<&SuiteParams> for SuiteParamsRecord {
    fn from(p: &SuiteParams) -> Self {
        let pair = |r: &Option<RangeInclusive<usize>>| r.as_ref().map(|r| (*r.start(), *r.end()));
        SuiteParamsRecord {
            n: pair(&p.n),
            t: pair(&p.t),
            seed: p.seed,
            corpus_size: p.corpus_size,
            samples: p.samples,
            stream: p.stream.as_ref().map(|s| s.display().to_string()),
        }
    }
}

/// Runs a suite and wraps the checks with their parameters and timing.
pub fn run_suite_report(suite: Suite, params: &SuiteParams) -> Result<SuiteReport, SuiteError> {
    let started = std::time::Instant::now();
    let checks = run_verification_suite(suite, params)?;
    Ok(SuiteReport {
        version: env!("CARGO_PKG_VERSION").into(),
        suite: suite.name().into(),
        params: params.into(),
        checks,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// Folds per-graph outcomes into one check.
fn aggregate<I>(id: String, expected: &str, cases: I) -> CheckResult
where
    I: IntoIterator<Item = (Graph, Result<(), String>)>,
{
    let mut total = 0usize;
    let mut failures = 0usize;
    let mut first: Option<(Graph, String)> = None;
    for (g, outcome) in cases {
        total += 1;
        if let Err(msg) = outcome {
            failures += 1;
            first.get_or_insert((g, msg));
        }
    }
    let (status, actual, witness) = match first {
        None => (Status::Pass, format!("holds for all {total}"), None),
        Some((g, msg)) => (
            Status::Fail,
            format!("fails for {failures} of {total}; first: {msg}"),
            Some(graph6::encode(&g)),
        ),
    };
    CheckResult {
        id,
        status,
        expected: expected.into(),
        actual,
        witness,
    }
}

fn expect_eq<T: PartialEq + fmt::Debug>(expected: T, actual: T) -> Result<(), String> {
    if expected == actual {
        Ok(())
    } else {
        Err(format!("expected {expected:?}, got {actual:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    W7Table,
    Traces,
    Lemma7,
    Eq1,
    LineShift,
    Bounds,
    Invariants,
    Degrees,
    Obstruction,
    Complement,
    Iso,
    CentipedeDs,
    AllGraphs,
    All,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::W7Table,
        Suite::Traces,
        Suite::Lemma7,
        Suite::Eq1,
        Suite::LineShift,
        Suite::Bounds,
        Suite::Invariants,
        Suite::Degrees,
        Suite::Obstruction,
        Suite::Complement,
        Suite::Iso,
        Suite::CentipedeDs,
        Suite::AllGraphs,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::W7Table => "w7-table",
            Suite::Traces => "traces",
            Suite::Lemma7 => "lemma7",
            Suite::Eq1 => "eq1",
            Suite::LineShift => "line-shift",
            Suite::Bounds => "bounds",
            Suite::Invariants => "invariants",
            Suite::Degrees => "degrees",
            Suite::Obstruction => "obstruction",
            Suite::Complement => "complement",
            Suite::Iso => "iso",
            Suite::CentipedeDs => "centipede-ds",
            Suite::AllGraphs => "all-graphs",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, SuiteError> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| SuiteError::Unknown(s.into()))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`")]
    Unknown(String),
    #[error("{what} {value} is beyond the cap of {cap}")]
    BeyondCap { what: &'static str, value: usize, cap: usize },
    #[error("suite all-graphs needs a graph6 stream")]
    MissingStream,
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// Overrides for the suites' default ranges; `None` keeps the default.
#[derive(Debug, Clone)]
pub struct SuiteParams {
    /// Vertex counts for the tree suites.
    pub n: Option<RangeInclusive<usize>>,
    /// Triangle counts for the chain suites.
    pub t: Option<RangeInclusive<usize>>,
    pub seed: u64,
    /// Random graphs in the corpus used by `bounds` and `invariants`.
    pub corpus_size: usize,
    /// Random graphs for `complement`, random trees for `line-shift`.
    pub samples: usize,
    pub workers: usize,
    pub stream: Option<PathBuf>,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n: None,
            t: None,
            seed: 2024,
            corpus_size: 10_000,
            samples: 0,
            workers: 1,
            stream: None,
        }
    }
}

impl SuiteParams {
    fn n_or(&self, default: RangeInclusive<usize>) -> RangeInclusive<usize> {
        self.n.clone().unwrap_or(default)
    }

    fn t_or(&self, default: RangeInclusive<usize>) -> RangeInclusive<usize> {
        self.t.clone().unwrap_or(default)
    }

    fn samples_or(&self, default: usize) -> usize {
        if self.samples == 0 {
            default
        } else {
            self.samples
        }
    }

    fn validate(&self) -> Result<(), SuiteError> {
        let caps = [
            ("tree order", self.n.as_ref().map(|r| *r.end()), MAX_SUITE_TREE_ORDER),
            ("triangle count", self.t.as_ref().map(|r| *r.end()), MAX_SUITE_TRIANGLES),
            ("corpus size", Some(self.corpus_size), MAX_CORPUS),
            ("sample count", Some(self.samples), MAX_CORPUS),
        ];
        for (what, value, cap) in caps {
            if let Some(value) = value {
                if value > cap {
                    return Err(SuiteError::BeyondCap { what, value, cap });
                }
            }
        }
        Ok(())
    }
}

fn evens(r: RangeInclusive<usize>) -> impl Iterator<Item = usize> {
    r.filter(|n| n % 2 == 0)
}

/// Runs a suite on a pool of `params.workers` threads.
pub fn run_verification_suite(suite: Suite, params: &SuiteParams) -> Result<Vec<CheckResult>, SuiteError> {
    params.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(params.workers.max(1))
        .build()
        .map_err(SearchError::from)?;
    pool.install(|| run_in_pool(suite, params))
}

fn run_in_pool(suite: Suite, params: &SuiteParams) -> Result<Vec<CheckResult>, SuiteError> {
    Ok(match suite {
        Suite::W7Table => w7_table(),
        Suite::Traces => traces(),
        Suite::Lemma7 => lemma7(params),
        Suite::Eq1 => eq1(params),
        Suite::LineShift => line_shift(params),
        Suite::Bounds => bounds(params),
        Suite::Invariants => invariants(params),
        Suite::Degrees => degrees(params),
        Suite::Obstruction => obstruction(params),
        Suite::Complement => complement(params),
        Suite::Iso => iso(params)?,
        Suite::CentipedeDs => centipede_ds(params)?,
        Suite::AllGraphs => all_graphs(params)?,
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::ALL {
                match s {
                    Suite::All => {}
                    Suite::AllGraphs if params.stream.is_none() => {}
                    _ => out.extend(run_in_pool(s, params)?),
                }
            }
            out
        }
    })
}

fn trace7(g: &Graph) -> BigInt {
    IntSymMatrix::of(g, MatrixKind::Adjacency).power_traces(7).swap_remove(7)
}

fn w7_table() -> Vec<CheckResult> {
    Motif::ALL
        .iter()
        .zip(W7_STATED)
        .map(|(m, stated)| {
            let w = covering_walk_count(&m.graph(), 7).expect("motifs are small");
            CheckResult::compare(format!("w7-table/{m}"), BigUint::from(stated), w, Some(&m.graph()))
        })
        .collect()
}

fn traces() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut solved: Vec<BigInt> = Vec::new();
    for (i, m) in Motif::ALL.iter().enumerate() {
        let host = m.graph();
        let row = TRACE_EQUATIONS[i];
        let counted: Vec<u64> = Motif::ALL.iter().map(|p| count_subgraphs(&host, &p.graph())).collect();
        out.push(CheckResult::compare(
            format!("traces/{m}/copies"),
            format!("{row:?}"),
            format!("{counted:?}"),
            Some(&host),
        ));
        let combination: u64 = row.iter().zip(W7_STATED).map(|(c, w)| c * w).sum();
        let trace = trace7(&host);
        out.push(CheckResult::compare(
            format!("traces/{m}/tr(A^7)"),
            BigInt::from(combination),
            trace.clone(),
            Some(&host),
        ));
        // forward substitution: the last motif in each row has coefficient 1
        let known: BigInt = (0..i).map(|j| BigInt::from(row[j]) * &solved[j]).sum();
        solved.push(trace - known);
    }
    let stated: Vec<BigInt> = W7_STATED.iter().map(|&w| BigInt::from(w)).collect();
    out.push(CheckResult::compare(
        "traces/solved-w7".into(),
        format!("{stated:?}"),
        format!("{solved:?}"),
        None,
    ));
    out
}

fn lemma7(params: &SuiteParams) -> Vec<CheckResult> {
    params
        .t_or(2..=8)
        .filter(|&t| t >= 2)
        .map(|t| {
            let chains: Vec<_> = triangle_chains(t).expect("t within range").collect();
            let cases = chains.into_par_iter().map(|c| {
                let expected = lemma7_value(t, c.profile.t3).expect("profile of a real chain");
                let outcome = expect_eq(expected, trace7(&c.graph));
                (c.graph, outcome)
            });
            aggregate(
                format!("lemma7/t={t}"),
                "tr(A^7) = 686t - 672 + 112 t3",
                cases.collect::<Vec<_>>(),
            )
        })
        .collect()
}

fn eq1(params: &SuiteParams) -> Vec<CheckResult> {
    let shapes: Vec<Graph> = Motif::ALL.iter().map(|m| m.graph()).collect();
    let mut out = Vec::new();
    for t in params.t_or(2..=6).filter(|&t| t >= 1) {
        let chains: Vec<_> = triangle_chains(t).expect("t within range").collect();
        let residuals = chains.par_iter().map(|c| {
            let r = walk_decomposition_residual(&c.graph, 7, &shapes).map_err(|e| e.to_string());
            (c.graph.clone(), r.and_then(|r| expect_eq(BigInt::from(0), r)))
        });
        out.push(aggregate(
            format!("eq1/residual/t={t}"),
            "tr(A^7) - Σ w7(M)|M(G)| = 0",
            residuals.collect::<Vec<_>>(),
        ));
        let censuses = chains
            .par_iter()
            .map(|c| (c.graph.clone(), census_of(&c.graph).map(|_| ()).map_err(|e| e.to_string())));
        out.push(aggregate(
            format!("eq1/census/t={t}"),
            "motif counts equal the closed forms in t and t3",
            censuses.collect::<Vec<_>>(),
        ));
    }
    out
}

fn line_shift_holds(g: &Graph) -> Result<(), String> {
    let shifted = adjacency_poly(&g.line_graph()).shift(&BigInt::from(-2)).mul_x_pow(1);
    expect_eq(laplacian_poly(g).to_string(), shifted.to_string())
}

fn line_shift(params: &SuiteParams) -> Vec<CheckResult> {
    let expected = "char L(G)(x) = x * char A(line G)(x - 2)";
    let mut out: Vec<CheckResult> = params
        .n_or(2..=10)
        .filter(|&n| n >= 2)
        .map(|n| {
            let trees: Vec<Graph> = enumerate_trees(n, None).expect("n within range").collect();
            let cases: Vec<_> = trees.into_par_iter().map(|g| {
                let r = line_shift_holds(&g);
                (g, r)
            }).collect();
            aggregate(format!("line-shift/all-trees/n={n}"), expected, cases)
        })
        .collect();
    let samples = params.samples_or(200);
    let cases: Vec<_> = random_trees(params.seed, samples, 2, 14)
        .into_par_iter()
        .map(|g| {
            let r = line_shift_holds(&g);
            (g, r)
        })
        .collect();
    out.push(aggregate(format!("line-shift/random-trees/{samples}"), expected, cases));
    out
}

fn bounds_hold(g: &Graph) -> Result<(), String> {
    let r = check_spectral_bounds(g, 1e-9).map_err(|e| e.to_string())?;
    if r.ok {
        Ok(())
    } else {
        Err(format!("max degree {} , mu1 {}, max edge degree sum {}", r.lower, r.mu1, r.upper))
    }
}

fn bounds(params: &SuiteParams) -> Vec<CheckResult> {
    let expected = "max d(v) < mu1 <= max d(u)+d(v), tol 1e-9";
    let mut out: Vec<CheckResult> = params
        .n_or(2..=12)
        .filter(|&n| n >= 2)
        .map(|n| {
            let trees: Vec<Graph> = enumerate_trees(n, None).expect("n within range").collect();
            let cases: Vec<_> = trees.into_par_iter().map(|g| {
                let r = bounds_hold(&g);
                (g, r)
            }).collect();
            aggregate(format!("bounds/trees/n={n}"), expected, cases)
        })
        .collect();
    let corpus: Vec<_> = random_graphs(params.seed, params.corpus_size, 8)
        .into_par_iter()
        .filter(|g| g.size() > 0)
        .map(|g| {
            let r = bounds_hold(&g);
            (g, r)
        })
        .collect();
    out.push(aggregate(format!("bounds/corpus/{}", params.corpus_size), expected, corpus));
    let centipedes = evens(8..=20).map(|n| {
        let g = centipede(n);
        let r = check_spectral_bounds(&g, 1e-9).map_err(|e| e.to_string()).and_then(|r| {
            expect_eq((3, 6, true), (r.lower, r.upper, r.ok))
        });
        (g, r)
    });
    out.push(aggregate(
        "bounds/centipedes/n=8..20".into(),
        "lower = 3, upper = 6, bounds hold",
        centipedes.collect::<Vec<_>>(),
    ));
    out
}

/// Spanning trees through a Laplacian cofactor.
fn cofactor_spanning_trees(g: &Graph) -> BigUint {
    let n = g.order();
    if !g.is_connected() {
        return BigUint::default();
    }
    if n == 1 {
        return BigUint::from(1u32);
    }
    let l = IntSymMatrix::of(g, MatrixKind::Laplacian);
    let minor: Vec<i64> = (1..n).flat_map(|i| (1..n).map(move |j| (i, j))).map(|(i, j)| l.get(i, j)).collect();
    determinant(&minor, n - 1).to_biguint().expect("cofactor of a Laplacian is nonnegative")
}

#[derive(Debug, PartialEq)]
struct Derived {
    n: usize,
    m: usize,
    c: usize,
    tau: BigUint,
    s2: BigInt,
    s3: BigInt,
}

fn invariants_match(g: &Graph) -> Result<(), String> {
    let p = laplacian_poly(g);
    let basic = derive_basic_invariants(&p).map_err(|e| e.to_string())?;
    let moments = degree_moment_sums(&p, g.triangle_count() as u64).map_err(|e| e.to_string())?;
    let from_spectrum = Derived {
        n: basic.order,
        m: basic.edges,
        c: basic.components,
        tau: basic.spanning_trees,
        s2: moments.s2,
        s3: moments.s3,
    };
    let d = g.degrees();
    let direct = Derived {
        n: g.order(),
        m: g.size(),
        c: g.component_count(),
        tau: cofactor_spanning_trees(g),
        s2: d.iter().map(|&x| BigInt::from(x * x)).sum(),
        s3: d.iter().map(|&x| BigInt::from(x * x * x)).sum(),
    };
    expect_eq(direct, from_spectrum)
}

fn invariants(params: &SuiteParams) -> Vec<CheckResult> {
    let corpus = random_graphs(params.seed, params.corpus_size, 8);
    let (connected, other): (Vec<Graph>, Vec<Graph>) = corpus.into_iter().partition(|g| g.is_connected());
    let run = |gs: Vec<Graph>| -> Vec<_> {
        gs.into_par_iter()
            .map(|g| {
                let r = invariants_match(&g);
                (g, r)
            })
            .collect()
    };
    let expected = "(n, m, c, tau, s2, s3) from the Laplacian polynomial equal direct counts";
    vec![
        aggregate("invariants/corpus/connected".into(), expected, run(connected)),
        aggregate("invariants/corpus/disconnected".into(), expected, run(other)),
    ]
}

/// The spectrum-only route from the Laplacian polynomial of a centipede to
/// its degree distribution.
pub fn centipede_degree_pipeline(n: usize) -> Result<Vec<DegreeDistribution>, String> {
    let p = laplacian_poly(&centipede(n));
    let basic = derive_basic_invariants(&p).map_err(|e| e.to_string())?;
    // connected with n - 1 edges: a tree, so no triangles
    if basic.components != 1 || basic.edges + 1 != basic.order {
        return Err("spectrum is not that of a tree".into());
    }
    let moments = degree_moment_sums(&p, 0).map_err(|e| e.to_string())?;
    let sys = DegreeSystem::from_spectrum(&basic, &moments, 5).map_err(|e| e.to_string())?;
    Ok(solve_degree_distribution(&sys))
}

fn degrees(params: &SuiteParams) -> Vec<CheckResult> {
    evens(params.n_or(4..=20))
        .filter(|&n| n >= 4)
        .map(|n| {
            let expected = vec![DegreeDistribution::from_counts(vec![0, (n + 2) / 2, 0, (n - 2) / 2, 0, 0])];
            let show = |v: &[DegreeDistribution]| format!("{:?}", v.iter().map(|d| d.counts().to_vec()).collect::<Vec<_>>());
            let (actual, ok) = match centipede_degree_pipeline(n) {
                Ok(sols) => (show(&sols), sols == expected),
                Err(e) => (e, false),
            };
            CheckResult {
                id: format!("degrees/centipede/n={n}"),
                status: if ok { Status::Pass } else { Status::Fail },
                expected: format!("unique solution {}", show(&expected)),
                actual,
                witness: (!ok).then(|| graph6::encode(&centipede(n))),
            }
        })
        .collect()
}

fn obstruction(params: &SuiteParams) -> Vec<CheckResult> {
    evens(params.n_or(4..=16))
        .filter(|&n| n >= 4)
        .map(|n| {
            let chain = k_inverse(&path((n - 2) / 2)).expect("paths have degree at most 2").graph;
            let cases: Vec<_> = enumerate_trees(n, Some(3))
                .expect("n within range")
                .filter(|g| g.degrees().iter().all(|&d| d == 1 || d == 3))
                .map(|g| {
                    let c = is_centipede(&g);
                    let h = contains_obstruction_h(&g).expect("enumerated graphs are trees");
                    let line_matches = g.line_graph().is_isomorphic(&chain);
                    let r = if c == h {
                        Err(format!("centipede = {c}, contains spider = {h}"))
                    } else if line_matches != c {
                        Err(format!("centipede = {c}, line graph is the triangle chain = {line_matches}"))
                    } else {
                        Ok(())
                    };
                    (g, r)
                })
                .collect();
            aggregate(
                format!("obstruction/n={n}"),
                "exactly one of centipede / spider; line graph is the path chain iff centipede",
                cases,
            )
        })
        .collect()
}

fn complement_holds(g: &Graph) -> Result<(), String> {
    let predicted = complement_spectrum(&laplacian_poly(g), g.order()).map_err(|e| e.to_string())?;
    expect_eq(laplacian_poly(&g.complement()).to_string(), predicted.to_string())
}

fn complement(params: &SuiteParams) -> Vec<CheckResult> {
    let expected = "complement polynomial from roots n - mu equals the direct one";
    let centipedes: Vec<_> = evens(params.n_or(2..=14))
        .filter(|&n| n >= 2)
        .map(|n| {
            let g = centipede(n);
            let r = complement_holds(&g);
            (g, r)
        })
        .collect();
    let samples = params.samples_or(1000);
    let random: Vec<_> = random_graphs(params.seed.wrapping_add(1), samples, 8)
        .into_par_iter()
        .map(|g| {
            let r = complement_holds(&g);
            (g, r)
        })
        .collect();
    vec![
        aggregate("complement/centipedes".into(), expected, centipedes),
        aggregate(format!("complement/random/{samples}"), expected, random),
    ]
}

fn determined(
    id: String,
    class: GraphClass,
    orders: RangeInclusive<usize>,
    matrix: MatrixKind,
    target: &str,
    workers: usize,
) -> Result<CheckResult, SuiteError> {
    let mut p = SearchParams::new(class, Some(orders), matrix);
    p.targets = vec![target.parse::<GraphSpec>().expect("built-in target spec")];
    p.workers = workers;
    let report = run_cospectral_search(&p)?;
    let t = &report.targets[0];
    let ok = t.class_size == 1 && t.determined;
    Ok(CheckResult {
        id,
        status: if ok { Status::Pass } else { Status::Fail },
        expected: "class size 1".into(),
        actual: format!("class size {} among {} scanned", t.class_size, report.scanned),
        witness: t.mates.first().cloned(),
    })
}

fn iso(params: &SuiteParams) -> Result<Vec<CheckResult>, SuiteError> {
    params
        .t_or(2..=10)
        .filter(|&t| t >= 2)
        .map(|t| {
            determined(
                format!("iso/t={t}"),
                GraphClass::TriangleChains,
                t..=t,
                MatrixKind::Adjacency,
                &format!("kinv-path:{t}"),
                params.workers,
            )
        })
        .collect()
}

fn centipede_ds(params: &SuiteParams) -> Result<Vec<CheckResult>, SuiteError> {
    evens(params.n_or(4..=18))
        .filter(|&n| n >= 4)
        .map(|n| {
            determined(
                format!("centipede-ds/n={n}"),
                GraphClass::Trees,
                n..=n,
                MatrixKind::Laplacian,
                &format!("centipede:{n}"),
                params.workers,
            )
        })
        .collect()
}

fn all_graphs(params: &SuiteParams) -> Result<Vec<CheckResult>, SuiteError> {
    let stream = params.stream.clone().ok_or(SuiteError::MissingStream)?;
    let mut p = SearchParams::new(GraphClass::Graph6(stream), None, MatrixKind::Laplacian);
    p.targets = ["centipede:4", "centipede:6", "centipede:8"]
        .iter()
        .map(|s| s.parse().expect("built-in target spec"))
        .collect();
    p.workers = params.workers;
    let report = run_cospectral_search(&p)?;
    Ok(report
        .targets
        .iter()
        .map(|t| {
            let ok = t.class_size == 1 && t.determined;
            CheckResult {
                id: format!("all-graphs/centipede/n={}", t.order),
                status: if ok { Status::Pass } else { Status::Fail },
                expected: "class size 1".into(),
                actual: format!("class size {} among {} scanned", t.class_size, report.scanned),
                witness: t.mates.first().cloned(),
            }
        })
        .collect())
}
