//! Undirected simple graphs and the constructions built on them.

mod canon;
mod cliques;
pub mod graph6;
mod subgraph;

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use canon::{canonical_label, CanonicalLabel};
pub use cliques::{clique_graph, maximal_cliques};
pub use subgraph::{automorphism_count, count_embeddings, count_subgraphs, Motif};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{family} needs at least {min} vertices, got {size}")]
    TooSmall {
        family: Family,
        size: usize,
        min: usize,
    },
    #[error("centipede order must be even, got {0}")]
    OddCentipede(usize),
    #[error("triangle has exactly 3 vertices, got {0}")]
    TriangleSize(usize),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(alloc::string::String),
}

/// An immutable undirected simple graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted, which makes edge lookups a binary search
/// and gives every derived object a deterministic order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj })
    }

    /// Builds from sorted, symmetric, loop-free neighbor lists. Internal
    /// constructors guarantee these properties; debug builds check them.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let g = Graph { adj };
        debug_assert!(g.check_invariants());
        g
    }

    fn check_invariants(&self) -> bool {
        self.adj.iter().enumerate().all(|(v, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list
                    .iter()
                    .all(|&u| u != v && u < self.order() && self.adj[u].binary_search(&v).is_ok())
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Component index of every vertex, components numbered by smallest vertex.
    pub fn component_ids(&self) -> (usize, Vec<usize>) {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    pub fn component_count(&self) -> usize {
        self.component_ids().0
    }

    /// The empty graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.size() + self.component_count() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.is_connected() && self.size() + 1 == self.order()
    }

    pub fn triangle_count(&self) -> usize {
        let mut count = 0;
        for (u, v) in self.edges() {
            count += self.adj[v]
                .iter()
                .filter(|&&w| w > v && self.has_edge(u, w))
                .count();
        }
        count
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        assert_eq!(perm.len(), n, "permutation length must equal graph order");
        let mut seen = vec![false; n];
        for &p in perm {
            assert!(p < n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut adj = vec![Vec::new(); n];
        for (v, list) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = list.iter().map(|&w| perm[w]).collect();
            mapped.sort_unstable();
            adj[perm[v]] = mapped;
        }
        Graph::from_sorted_adjacency(adj)
    }

    /// Subgraph induced by the given edges, on the vertices they touch
    /// (renumbered in increasing order of original label).
    pub fn edge_subgraph(&self, edges: &[(usize, usize)]) -> Graph {
        let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let index = |x: usize| verts.binary_search(&x).unwrap();
        Graph::from_edges(verts.len(), edges.iter().map(|&(u, v)| (index(u), index(v))))
            .expect("edges of a simple graph form a simple graph")
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adj = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&v| v != u && self.adj[u].binary_search(&v).is_err())
                    .collect()
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// Line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        // incidence lists, each sorted because edges are enumerated in order
        let mut incident = vec![Vec::new(); self.order()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let adj = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                let mut list: Vec<usize> = incident[u]
                    .iter()
                    .chain(&incident[v])
                    .copied()
                    .filter(|&j| j != i)
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&w| w + shift).collect()),
        );
        Graph::from_sorted_adjacency(adj)
    }

    pub fn canonical_label(&self) -> CanonicalLabel {
        canonical_label(self)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.order() == other.order()
            && self.size() == other.size()
            && {
                let mut a = self.degrees();
                let mut b = other.degrees();
                a.sort_unstable();
                b.sort_unstable();
                a == b
            }
            && canonical_label(self) == canonical_label(other)
    }
}

/// Named graph families accepted by [`build`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    /// `K_{1,size-1}`: `size` counts all vertices.
    Star,
    Triangle,
    /// A path with a pendant vertex on each internal vertex; `size` is the
    /// total vertex count and must be even.
    Centipede,
    Empty,
    Complete,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Triangle,
        Family::Centipede,
        Family::Empty,
        Family::Complete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Triangle => "triangle",
            Family::Centipede => "centipede",
            Family::Empty => "empty",
            Family::Complete => "complete",
        }
    }

    pub fn min_size(self) -> usize {
        match self {
            Family::Path | Family::Empty | Family::Complete => 1,
            Family::Star | Family::Centipede => 2,
            Family::Cycle | Family::Triangle => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| GraphError::UnknownFamily(s.into()))
    }
}

pub fn build(family: Family, size: usize) -> Result<Graph, GraphError> {
    if size < family.min_size() {
        return Err(GraphError::TooSmall {
            family,
            size,
            min: family.min_size(),
        });
    }
    let edges: Vec<(usize, usize)> = match family {
        Family::Path => (1..size).map(|v| (v - 1, v)).collect(),
        Family::Cycle => (0..size).map(|v| (v, (v + 1) % size)).collect(),
        Family::Star => (1..size).map(|v| (0, v)).collect(),
        Family::Triangle => {
            if size != 3 {
                return Err(GraphError::TriangleSize(size));
            }
            vec![(0, 1), (0, 2), (1, 2)]
        }
        Family::Centipede => {
            if size % 2 != 0 {
                return Err(GraphError::OddCentipede(size));
            }
            // spine 0..spine, pendants spine.. hang off spine vertices 1..spine-1
            let spine = size / 2 + 1;
            let mut e: Vec<(usize, usize)> = (1..spine).map(|v| (v - 1, v)).collect();
            e.extend((1..spine - 1).map(|v| (v, spine + v - 1)));
            e
        }
        Family::Empty => Vec::new(),
        Family::Complete => (0..size)
            .flat_map(|u| (u + 1..size).map(move |v| (u, v)))
            .collect(),
    };
    Graph::from_edges(size, edges)
}

/// `P_k`, the path on `k` vertices.
pub fn path(k: usize) -> Graph {
    build(Family::Path, k.max(1)).expect("path order is at least 1")
}

/// Centipede on `n` vertices.
///
/// # Panics
/// If `n` is odd or smaller than 2.
pub fn centipede(n: usize) -> Graph {
    build(Family::Centipede, n).expect("centipede order must be even and >= 2")
}

/// Spider `S(2,2,2)`: a center with three legs of length two.
pub fn spider_222() -> Graph {
    Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
}
