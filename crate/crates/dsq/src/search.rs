//! Grouping a stream of graphs by exact characteristic polynomial.
//!
//! Graphs are numbered in scan order and fingerprinted in parallel chunks;
//! each worker folds its share into a partial map and the partials are
//! merged. A class keeps its size and the graph6 strings of its two
//! lowest-numbered members, so the result does not depend on how the work
//! was split.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use dsq_core::families::{enumerate_trees, triangle_chains, MAX_TREE_ORDER};
use dsq_core::graph::{canonical_label, graph6};
use dsq_core::{Graph, MatrixKind};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::fingerprint::Fingerprint;
use crate::spec::{GraphSpec, SpecError};
use crate::stream::{ingest_graph6_stream, SkippedRecord, StreamError};

/// Desk-scale caps on the built-in families.
pub const MAX_SEARCH_TREE_ORDER: usize = 20;
pub const MAX_SEARCH_TRIANGLES: usize = 10;

const CHUNK: usize = 4096;
const WITNESSES: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphClass {
    Trees,
    TriangleChains,
    Graph6(PathBuf),
}

impl FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "trees" => Ok(GraphClass::Trees),
            "tchains" => Ok(GraphClass::TriangleChains),
            _ => match s.strip_prefix("g6:") {
                Some(p) if !p.is_empty() => Ok(GraphClass::Graph6(p.into())),
                _ => Err(format!("unknown class `{s}`; expected trees, tchains or g6:<path>")),
            },
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::Trees => f.write_str("trees"),
            GraphClass::TriangleChains => f.write_str("tchains"),
            GraphClass::Graph6(p) => write!(f, "g6:{}", p.display()),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error("{what} {value} is beyond the cap of {cap}")]
    BeyondCap { what: &'static str, value: usize, cap: usize },
    #[error("class {0} needs an order range")]
    MissingOrders(GraphClass),
    #[error("empty order range")]
    EmptyRange,
    #[error("bad target: {0}")]
    Target(#[from] SpecError),
    #[error(transparent)]
    Stream(#[from] StreamError),
    #[error("could not start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Debug, Clone)]
pub struct SearchParams {
    pub class: GraphClass,
    /// Vertex counts for trees, triangle counts for chains, an optional
    /// order filter for graph6 streams.
    pub orders: Option<RangeInclusive<usize>>,
    pub matrix: MatrixKind,
    pub targets: Vec<GraphSpec>,
    pub workers: usize,
    /// Keep every member of every class instead of two witnesses.
    pub list_members: bool,
    pub skip_bad: bool,
}

impl SearchParams {
    pub fn new(class: GraphClass, orders: Option<RangeInclusive<usize>>, matrix: MatrixKind) -> Self {
        SearchParams {
            class,
            orders,
            matrix,
            targets: Vec::new(),
            workers: 1,
            list_members: false,
            skip_bad: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    /// Characteristic polynomial coefficients, constant term first.
    pub coefficients: Vec<String>,
    pub hash: String,
    pub size: u64,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetReport {
    pub graph6: String,
    pub order: usize,
    pub coefficients: Vec<String>,
    /// Scanned graphs sharing the target's polynomial.
    pub class_size: u64,
    /// Scanned graphs with the target's polynomial that are not isomorphic to it.
    pub mates: Vec<String>,
    pub determined: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub version: String,
    pub class: String,
    pub orders: Option<(usize, usize)>,
    pub matrix: String,
    pub scanned: u64,
    pub classes: Vec<ClassEntry>,
    pub targets: Vec<TargetReport>,
    pub skipped: Vec<SkippedRecord>,
    pub elapsed_ms: u64,
}

impl SearchReport {
    /// Every target is alone in its class.
    pub fn all_determined(&self) -> bool {
        self.targets.iter().all(|t| t.determined)
    }
}

struct ClassAcc {
    size: u64,
    members: Vec<(u64, String)>,
}

type Partial = HashMap<Fingerprint, ClassAcc>;

struct Accumulator<'a> {
    keep_all: bool,
    targets: &'a HashSet<Fingerprint>,
}

impl Accumulator<'_> {
    fn keep_all(&self, f: &Fingerprint) -> bool {
        self.keep_all || self.targets.contains(f)
    }

    fn insert(&self, mut map: Partial, (index, f, g): (u64, Fingerprint, &Graph)) -> Partial {
        let keep_all = self.keep_all(&f);
        let acc = map.entry(f).or_insert(ClassAcc { size: 0, members: Vec::new() });
        acc.size += 1;
        if keep_all || acc.members.len() < WITNESSES || acc.members.iter().any(|m| m.0 > index) {
            acc.members.push((index, graph6::encode(g)));
            trim(&mut acc.members, keep_all);
        }
        map
    }

    fn merge(&self, mut a: Partial, b: Partial) -> Partial {
        for (f, acc) in b {
            let keep_all = self.keep_all(&f);
            match a.get_mut(&f) {
                Some(x) => {
                    x.size += acc.size;
                    x.members.extend(acc.members);
                    trim(&mut x.members, keep_all);
                }
                None => {
                    a.insert(f, acc);
                }
            }
        }
        a
    }
}

struct Scanner<'a> {
    pool: rayon::ThreadPool,
    acc: Accumulator<'a>,
    matrix: MatrixKind,
    chunk: Vec<Graph>,
    classes: Partial,
    scanned: u64,
}

impl Scanner<'_> {
    fn push(&mut self, g: Graph) {
        self.chunk.push(g);
        if self.chunk.len() == CHUNK {
            self.flush();
        }
    }

    fn flush(&mut self) {
        if self.chunk.is_empty() {
            return;
        }
        let (base, matrix, acc, chunk) = (self.scanned, self.matrix, &self.acc, &self.chunk);
        let partial = self.pool.install(|| {
            chunk
                .par_iter()
                .enumerate()
                .map(|(i, g)| (base + i as u64, Fingerprint::of_graph(g, matrix), g))
                .fold(HashMap::new, |m, item| acc.insert(m, item))
                .reduce(HashMap::new, |a, b| acc.merge(a, b))
        });
        self.scanned += self.chunk.len() as u64;
        self.chunk.clear();
        self.classes = self.acc.merge(std::mem::take(&mut self.classes), partial);
    }
}

fn trim(members: &mut Vec<(u64, String)>, keep_all: bool) {
    members.sort_unstable_by_key(|m| m.0);
    if !keep_all {
        members.truncate(WITNESSES);
    }
}

fn coefficient_strings(f: &Fingerprint) -> Vec<String> {
    f.polynomial().coeffs().iter().map(|c| c.to_string()).collect()
}

/// Scans the class, groups by exact polynomial and reports on the targets.
pub fn run_cospectral_search(params: &SearchParams) -> Result<SearchReport, SearchError> {
    let started = Instant::now();
    if let Some(r) = &params.orders {
        if r.is_empty() {
            return Err(SearchError::EmptyRange);
        }
    }
    let (cap_what, cap) = match params.class {
        GraphClass::Trees => ("tree order", MAX_SEARCH_TREE_ORDER.min(MAX_TREE_ORDER)),
        GraphClass::TriangleChains => ("triangle count", MAX_SEARCH_TRIANGLES),
        GraphClass::Graph6(_) => ("order", usize::MAX),
    };
    if let Some(r) = &params.orders {
        if *r.end() > cap {
            return Err(SearchError::BeyondCap { what: cap_what, value: *r.end(), cap });
        }
    }

    let targets = resolve_targets(params)?;
    let target_prints: Vec<Fingerprint> = targets.iter().map(|g| Fingerprint::of_graph(g, params.matrix)).collect();
    let target_set: HashSet<Fingerprint> = target_prints.iter().cloned().collect();
    let acc = Accumulator {
        keep_all: params.list_members,
        targets: &target_set,
    };

    let mut scan = Scanner {
        pool: rayon::ThreadPoolBuilder::new().num_threads(params.workers.max(1)).build()?,
        acc,
        matrix: params.matrix,
        chunk: Vec::with_capacity(CHUNK),
        classes: HashMap::new(),
        scanned: 0,
    };
    let mut skipped = Vec::new();

    match &params.class {
        GraphClass::Trees => {
            let orders = params.orders.clone().ok_or_else(|| SearchError::MissingOrders(params.class.clone()))?;
            for n in orders {
                for g in enumerate_trees(n, None).map_err(SpecError::from)? {
                    scan.push(g);
                }
            }
        }
        GraphClass::TriangleChains => {
            let orders = params.orders.clone().ok_or_else(|| SearchError::MissingOrders(params.class.clone()))?;
            for t in orders {
                for c in triangle_chains(t).map_err(SpecError::from)? {
                    scan.push(c.graph);
                }
            }
        }
        GraphClass::Graph6(path) => {
            for item in ingest_graph6_stream(path)? {
                match item {
                    Ok(r) => {
                        if params.orders.as_ref().is_none_or(|o| o.contains(&r.graph.order())) {
                            scan.push(r.graph);
                        }
                    }
                    Err(StreamError::Malformed { line, offset, source }) if params.skip_bad => {
                        skipped.push(SkippedRecord {
                            line,
                            offset,
                            message: source.to_string(),
                        })
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    scan.flush();
    let Scanner { classes, scanned, .. } = scan;

    let target_reports = targets
        .iter()
        .zip(&target_prints)
        .map(|(g, f)| {
            let label = canonical_label(g);
            let (class_size, mates) = match classes.get(f) {
                Some(c) => (
                    c.size,
                    c.members
                        .iter()
                        .filter(|(_, code)| {
                            let h = graph6::decode(code.as_bytes()).expect("encoded by this search");
                            canonical_label(&h) != label
                        })
                        .map(|(_, code)| code.clone())
                        .collect::<Vec<_>>(),
                ),
                None => (0, Vec::new()),
            };
            TargetReport {
                graph6: graph6::encode(g),
                order: g.order(),
                coefficients: coefficient_strings(f),
                class_size,
                determined: mates.is_empty(),
                mates,
            }
        })
        .collect();

    let mut sorted: Vec<(Fingerprint, ClassAcc)> = classes.into_iter().collect();
    sorted.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let classes = sorted
        .into_iter()
        .map(|(f, c)| ClassEntry {
            coefficients: coefficient_strings(&f),
            hash: f.short_hash(),
            size: c.size,
            witnesses: c.members.into_iter().map(|m| m.1).collect(),
        })
        .collect();

    Ok(SearchReport {
        version: env!("CARGO_PKG_VERSION").into(),
        class: params.class.to_string(),
        orders: params.orders.as_ref().map(|r| (*r.start(), *r.end())),
        matrix: params.matrix.name().into(),
        scanned,
        classes,
        targets: target_reports,
        skipped,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// A sized spec is one graph; an unsized one yields a graph for every
/// order in range at which the family has a member.
fn resolve_targets(params: &SearchParams) -> Result<Vec<Graph>, SearchError> {
    let mut out = Vec::new();
    for spec in &params.targets {
        if spec.has_size() {
            out.push(spec.resolve(None)?);
            continue;
        }
        let orders = params.orders.clone().ok_or_else(|| SpecError::MissingSize(spec.to_string()))?;
        let before = out.len();
        out.extend(orders.filter_map(|n| spec.resolve(Some(n)).ok()));
        if out.len() == before {
            return Err(SpecError::MissingSize(spec.to_string()).into());
        }
    }
    Ok(out)
}

/// `(hash, size)` rows, one per class.
pub fn write_csv<W: std::io::Write>(report: &SearchReport, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["fingerprint_hash", "class_size"])?;
    for c in &report.classes {
        w.write_record([c.hash.as_str(), &c.size.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trees(n: usize) -> SearchParams {
        SearchParams::new(GraphClass::Trees, Some(n..=n), MatrixKind::Laplacian)
    }

    #[test]
    fn five_vertex_trees_are_pairwise_distinguished() {
        let r = run_cospectral_search(&trees(5)).unwrap();
        assert_eq!(r.scanned, 3);
        assert_eq!(r.classes.len(), 3);
        assert!(r.classes.iter().all(|c| c.size == 1 && c.witnesses.len() == 1));
    }

    #[test]
    fn centipede_on_eight_is_alone() {
        let mut p = trees(8);
        p.targets = vec!["centipede".parse().unwrap()];
        let r = run_cospectral_search(&p).unwrap();
        assert_eq!(r.targets.len(), 1);
        assert_eq!(r.targets[0].class_size, 1);
        assert!(r.all_determined());
    }

    #[test]
    fn chain_over_path_among_four_triangle_chains() {
        let mut p = SearchParams::new(GraphClass::TriangleChains, Some(4..=4), MatrixKind::Adjacency);
        p.targets = vec!["kinv-path".parse().unwrap()];
        let r = run_cospectral_search(&p).unwrap();
        assert_eq!(r.scanned, 2);
        assert_eq!(r.targets[0].class_size, 1);
    }

    #[test]
    fn mates_are_reported() {
        // the smallest Laplacian-cospectral pair of trees has 11 vertices
        let r = run_cospectral_search(&trees(11)).unwrap();
        let shared = r.classes.iter().find(|c| c.size > 1).expect("a cospectral pair of trees");
        let mut p = trees(11);
        p.targets = vec![format!("g6:{}", shared.witnesses[0]).parse().unwrap()];
        let r = run_cospectral_search(&p).unwrap();
        assert_eq!(r.targets[0].mates.len() as u64, r.targets[0].class_size - 1);
        assert!(!r.all_determined());
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(run_cospectral_search(&trees(21)), Err(SearchError::BeyondCap { .. })));
        let p = SearchParams::new(GraphClass::TriangleChains, None, MatrixKind::Adjacency);
        assert!(matches!(run_cospectral_search(&p), Err(SearchError::MissingOrders(_))));
    }
}
