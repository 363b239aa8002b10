//! Closed walks and the motifs that carry them.
//!
//! `tr(A^k)` counts closed walks of length `k` over all start vertices and
//! both directions. Grouping each walk by the subgraph of edges it uses
//! gives `tr(A^k) = Σ_M w_k(M) · |M(G)|`, where `w_k(M)` counts the closed
//! `k`-walks of `M` that use every edge of `M`. For triangle chains and
//! `k = 7` only five shapes contribute, which turns the trace into a
//! closed formula in the number of triangles and branch points.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};

use crate::graph::{canonical_label, clique_graph, count_subgraphs, CanonicalLabel, Graph, Motif};
use crate::spectral::{IntSymMatrix, MatrixKind};

/// Largest walk length and motif edge count the covering-walk DP accepts.
pub const MAX_WALK_LENGTH: usize = 12;
pub const MAX_MOTIF_EDGES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CensusError {
    #[error("covering-walk state space too large: {edges} edges, length {length} (caps {MAX_MOTIF_EDGES}, {MAX_WALK_LENGTH})")]
    TooLarge { edges: usize, length: usize },
    #[error("not a triangle chain: {0}")]
    NotTriangleChain(&'static str),
    #[error("motif census disagrees with the closed forms: observed {observed:?}, predicted {predicted:?}")]
    ClosedFormMismatch {
        observed: MotifCensus,
        predicted: MotifCensus,
    },
    #[error("closed 7-walk formula needs at least two triangles, got {0}")]
    TooFewTriangles(usize),
    #[error("{t3} branch points is impossible with {t} triangles")]
    BadBranchCount { t: usize, t3: usize },
}

/// Closed `k`-walks of `m` that traverse every edge at least once, summed
/// over start vertices. Dynamic programming over (vertex, edges used).
pub fn covering_walk_count(m: &Graph, k: usize) -> Result<BigUint, CensusError> {
    let edges = m.edges();
    let e = edges.len();
    if e > MAX_MOTIF_EDGES || k > MAX_WALK_LENGTH {
        return Err(CensusError::TooLarge { edges: e, length: k });
    }
    if k < e {
        return Ok(BigUint::default());
    }
    let n = m.order();
    let mut edge_id = vec![usize::MAX; n * n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        edge_id[u * n + v] = i;
        edge_id[v * n + u] = i;
    }
    let full = (1usize << e) - 1;
    let states = n << e;
    let mut total: u128 = 0;
    for start in 0..n {
        let mut dp = vec![0u128; states];
        dp[start << e] = 1;
        for _ in 0..k {
            let mut next = vec![0u128; states];
            for v in 0..n {
                for mask in 0..=full {
                    let ways = dp[(v << e) | mask];
                    if ways == 0 {
                        continue;
                    }
                    for &w in m.neighbors(v) {
                        let bit = 1 << edge_id[v * n + w];
                        next[(w << e) | mask | bit] += ways;
                    }
                }
            }
            dp = next;
        }
        total += dp[(start << e) | full];
    }
    Ok(BigUint::from(total))
}

/// Counts of `T, T1, T2, T3, T4` subgraphs, indexed in [`Motif::ALL`] order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MotifCensus(pub [u64; 5]);

impl MotifCensus {
    pub fn get(&self, m: Motif) -> u64 {
        self.0[Motif::ALL.iter().position(|&x| x == m).unwrap()]
    }

    pub fn observe(g: &Graph) -> Self {
        MotifCensus(Motif::ALL.map(|m| count_subgraphs(g, &m.graph())))
    }

    /// Counts a triangle chain must have, from its clique-tree profile.
    pub fn predicted(p: &TriangleChainProfile) -> Self {
        if p.t == 1 {
            return MotifCensus([1, 0, 0, 0, 0]);
        }
        let (t, t3) = (p.t as u64, p.t3 as u64);
        MotifCensus([
            t,
            2 * (2 * t - 2),
            2 * t - 2,
            4 * (t - 2) + 4 * t3,
            4 * (2 * t - 3 + t3),
        ])
    }
}

/// Degree profile of the clique tree `K(G)` of a triangle chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriangleChainProfile {
    /// Number of triangles, i.e. vertices of `K(G)`.
    pub t: usize,
    pub t1: usize,
    pub t2: usize,
    pub t3: usize,
}

impl TriangleChainProfile {
    /// Profile of a tree of maximum degree 3 (the clique tree).
    pub fn of_clique_tree(k: &Graph) -> Self {
        let count = |d: usize| k.degrees().into_iter().filter(|&x| x == d).count();
        TriangleChainProfile {
            t: k.order(),
            t1: count(1),
            t2: count(2),
            t3: count(3),
        }
    }
}

/// Biconnected components as edge lists (Hopcroft–Tarjan, iterative).
pub fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut out = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, parent, idx) = *top;
            if idx < g.degree(v) {
                top.2 += 1;
                let w = g.neighbors(v)[idx];
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (u, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// Validates membership in the triangle-chain family (connected, every
/// block a triangle, every vertex in at most two blocks) and returns the
/// profile of the clique tree.
pub fn triangle_chain_profile(g: &Graph) -> Result<TriangleChainProfile, CensusError> {
    if g.order() < 3 || !g.is_connected() {
        return Err(CensusError::NotTriangleChain("not a connected graph on 3+ vertices"));
    }
    let bs = blocks(g);
    let mut membership = vec![0usize; g.order()];
    for b in &bs {
        if b.len() != 3 {
            return Err(CensusError::NotTriangleChain("a block is not a triangle"));
        }
        let mut vs: Vec<usize> = b.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() != 3 {
            return Err(CensusError::NotTriangleChain("a block is not a triangle"));
        }
        for v in vs {
            membership[v] += 1;
        }
    }
    if membership.iter().any(|&c| c > 2) {
        return Err(CensusError::NotTriangleChain("a vertex lies in three or more triangles"));
    }
    let k = clique_graph(g);
    debug_assert!(k.is_tree() && k.max_degree() <= 3);
    Ok(TriangleChainProfile::of_clique_tree(&k))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub profile: TriangleChainProfile,
    pub observed: MotifCensus,
    pub predicted: MotifCensus,
}

/// Motif census of a triangle chain, checked against the closed forms.
pub fn census_of(g: &Graph) -> Result<CensusReport, CensusError> {
    let profile = triangle_chain_profile(g)?;
    let observed = MotifCensus::observe(g);
    let predicted = MotifCensus::predicted(&profile);
    if observed != predicted {
        return Err(CensusError::ClosedFormMismatch { observed, predicted });
    }
    Ok(CensusReport {
        profile,
        observed,
        predicted,
    })
}

/// `tr(A(G)^k) - Σ_M w_k(M) · |M(G)|`; zero when `motifs` covers every
/// shape that supports a closed `k`-walk in `G`.
pub fn walk_decomposition_residual(g: &Graph, k: usize, motifs: &[Graph]) -> Result<BigInt, CensusError> {
    let trace = IntSymMatrix::of(g, MatrixKind::Adjacency)
        .power_traces(k)
        .swap_remove(k);
    let mut explained = BigInt::default();
    for m in motifs {
        let w = covering_walk_count(m, k)?;
        explained += BigInt::from(w) * BigInt::from(count_subgraphs(g, m));
    }
    Ok(trace - explained)
}

/// `686t - 672 + 112t₃`, the number of closed 7-walks of a triangle chain
/// with `t ≥ 2` triangles and `t₃` branch points.
pub fn lemma7_value(t: usize, t3: usize) -> Result<BigInt, CensusError> {
    if t < 2 {
        return Err(CensusError::TooFewTriangles(t));
    }
    if 2 * t3 > t - 2 {
        return Err(CensusError::BadBranchCount { t, t3 });
    }
    Ok(BigInt::from(686) * t - 672 + BigInt::from(112) * t3)
}

/// Isomorphism classes of connected subgraphs of `g` (by edge set, at most
/// `k` edges) that carry at least one covering closed `k`-walk.
pub fn covering_walk_shapes(g: &Graph, k: usize) -> Result<Vec<Graph>, CensusError> {
    let edges = g.edges();
    if edges.len() > 64 {
        return Err(CensusError::TooLarge { edges: edges.len(), length: k });
    }
    let touches = |a: (usize, usize), b: (usize, usize)| a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    let mut frontier: Vec<u64> = (0..edges.len()).map(|i| 1u64 << i).collect();
    seen.extend(frontier.iter().copied());
    let mut shapes: BTreeSet<CanonicalLabel> = BTreeSet::new();
    let mut out = Vec::new();
    for size in 1..=k.min(edges.len()) {
        let mut next = Vec::new();
        for &mask in &frontier {
            let chosen: Vec<(usize, usize)> = (0..edges.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| edges[i])
                .collect();
            let sub = g.edge_subgraph(&chosen);
            let label = canonical_label(&sub);
            if !shapes.contains(&label) && covering_walk_count(&sub, k)? > BigUint::default() {
                shapes.insert(label);
                out.push(sub);
            }
            if size < k {
                for (i, &e) in edges.iter().enumerate() {
                    let bit = 1u64 << i;
                    if mask & bit == 0 && chosen.iter().any(|&c| touches(c, e)) && seen.insert(mask | bit) {
                        next.push(mask | bit);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build, path, Family};

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    fn chain3() -> Graph {
        Graph::from_edges(
            7,
            [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)],
        )
        .unwrap()
    }

    #[test]
    fn covering_counts_of_motifs() {
        let w: Vec<BigUint> = Motif::ALL
            .iter()
            .map(|m| covering_walk_count(&m.graph(), 7).unwrap())
            .collect();
        let expect: Vec<BigUint> = [126u32, 84, 28, 14, 14].iter().map(|&x| x.into()).collect();
        assert_eq!(w, expect);
        assert_eq!(covering_walk_count(&path(2), 2).unwrap(), 2u32.into());
        assert_eq!(covering_walk_count(&Motif::Triangle.graph(), 3).unwrap(), 6u32.into());
        assert_eq!(covering_walk_count(&Motif::Tadpole.graph(), 4).unwrap(), 0u32.into());
        assert!(matches!(
            covering_walk_count(&build(Family::Complete, 6).unwrap(), 15),
            Err(CensusError::TooLarge { .. })
        ));
    }

    /// Enumerates every closed walk step by step and keeps the covering ones.
    fn naive_covering(m: &Graph, k: usize) -> u64 {
        fn go(m: &Graph, start: usize, v: usize, left: usize, used: &mut Vec<(usize, usize)>, need: usize) -> u64 {
            if left == 0 {
                let mut distinct = used.clone();
                distinct.sort_unstable();
                distinct.dedup();
                return u64::from(v == start && distinct.len() == need);
            }
            let mut total = 0;
            for &w in m.neighbors(v) {
                used.push((v.min(w), v.max(w)));
                total += go(m, start, w, left - 1, used, need);
                used.pop();
            }
            total
        }
        (0..m.order())
            .map(|s| go(m, s, s, k, &mut Vec::new(), m.size()))
            .sum()
    }

    #[test]
    fn dp_matches_naive_enumeration() {
        for m in Motif::ALL {
            let g = m.graph();
            for k in 0..=8 {
                assert_eq!(covering_walk_count(&g, k).unwrap(), naive_covering(&g, k).into(), "{m} k={k}");
            }
        }
    }

    #[test]
    fn censuses() {
        assert_eq!(census_of(&bowtie()).unwrap().observed, MotifCensus([2, 4, 2, 0, 4]));
        assert_eq!(census_of(&chain3()).unwrap().observed, MotifCensus([3, 8, 4, 4, 12]));
        let k3 = build(Family::Triangle, 3).unwrap();
        assert_eq!(census_of(&k3).unwrap().observed, MotifCensus([1, 0, 0, 0, 0]));
        assert!(matches!(
            census_of(&build(Family::Complete, 4).unwrap()),
            Err(CensusError::NotTriangleChain(_))
        ));
        assert!(matches!(census_of(&path(4)), Err(CensusError::NotTriangleChain(_))));
    }

    #[test]
    fn membership_rejects_near_misses() {
        // three triangles sharing one vertex
        let windmill = Graph::from_edges(
            7,
            [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (0, 6), (5, 6)],
        )
        .unwrap();
        assert!(triangle_chain_profile(&windmill).is_err());
        // a ring of three triangles encloses a fourth
        let ring = Graph::from_edges(
            6,
            [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)],
        )
        .unwrap();
        assert!(triangle_chain_profile(&ring).is_err());
        let two_bowties = bowtie().disjoint_union(&bowtie());
        assert!(triangle_chain_profile(&two_bowties).is_err());
    }

    #[test]
    fn residuals() {
        let shapes: Vec<Graph> = Motif::ALL.iter().map(|m| m.graph()).collect();
        assert_eq!(walk_decomposition_residual(&bowtie(), 7, &shapes).unwrap(), BigInt::from(0));
        let k3 = build(Family::Triangle, 3).unwrap();
        let tri = [Motif::Triangle.graph()];
        assert_eq!(walk_decomposition_residual(&k3, 7, &tri).unwrap(), BigInt::from(0));
        assert_eq!(walk_decomposition_residual(&k3, 3, &tri).unwrap(), BigInt::from(0));
        // without the tadpole the bowtie leaves 14 * 4 walks unexplained
        assert_eq!(walk_decomposition_residual(&bowtie(), 7, &shapes[..4]).unwrap(), BigInt::from(56));
    }

    #[test]
    fn lemma_values() {
        assert_eq!(lemma7_value(2, 0).unwrap(), BigInt::from(700));
        assert_eq!(lemma7_value(3, 0).unwrap(), BigInt::from(1386));
        assert_eq!(lemma7_value(4, 1).unwrap(), BigInt::from(2184));
        assert_eq!(lemma7_value(1, 0), Err(CensusError::TooFewTriangles(1)));
        assert_eq!(lemma7_value(4, 2), Err(CensusError::BadBranchCount { t: 4, t3: 2 }));
    }

    #[test]
    fn blocks_of_small_graphs() {
        assert_eq!(blocks(&bowtie()).len(), 2);
        assert_eq!(blocks(&path(5)).len(), 4);
        assert_eq!(blocks(&build(Family::Cycle, 5).unwrap()).len(), 1);
    }
}
