//! Free trees, triangle chains and the clique-tree bijection between them.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{canonical_label, centipede, clique_graph, Graph};
use crate::walks::{triangle_chain_profile, CensusError, TriangleChainProfile};

/// Largest order [`enumerate_trees`] accepts.
pub const MAX_TREE_ORDER: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("tree order {0} outside 1..={MAX_TREE_ORDER}")]
    OrderOutOfRange(usize),
    #[error("degree bound {0} is below 2")]
    BadDegreeBound(usize),
    #[error("input is not a tree")]
    NotATree,
    #[error("tree has a vertex of degree {0}, above 3")]
    DegreeTooLarge(usize),
    #[error(transparent)]
    NotTriangleChain(#[from] CensusError),
}

/// Every free tree on `n` vertices once up to isomorphism, optionally
/// restricted to maximum degree `dmax`.
///
/// Walks canonical level sequences of rooted trees and keeps only those
/// rooted at a center in normal form (Wright, Richmond, Odlyzko, McKay),
/// so each step is amortized constant time and only one sequence is held.
#[derive(Debug, Clone)]
pub struct TreeStream {
    order: usize,
    dmax: Option<usize>,
    layout: Option<Vec<usize>>,
    // n = 1 and n = 2 bypass the level-sequence walk
    tiny: Option<Graph>,
}

pub fn enumerate_trees(n: usize, dmax: Option<usize>) -> Result<TreeStream, FamilyError> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(FamilyError::OrderOutOfRange(n));
    }
    if let Some(d) = dmax {
        if d < 2 {
            return Err(FamilyError::BadDegreeBound(d));
        }
    }
    let (layout, tiny) = if n <= 2 {
        (None, Some(crate::graph::path(n)))
    } else {
        // the path, rooted at its center
        let layout: Vec<usize> = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
        (Some(layout), None)
    };
    Ok(TreeStream {
        order: n,
        dmax,
        layout,
        tiny,
    })
}

impl TreeStream {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree_bound(&self) -> Option<usize> {
        self.dmax
    }

    fn next_unfiltered(&mut self) -> Option<Graph> {
        if let Some(g) = self.tiny.take() {
            return Some(g);
        }
        let candidate = self.layout.take()?;
        let tree = next_free_tree(candidate);
        let g = layout_to_graph(&tree);
        self.layout = next_rooted_tree(&tree, None);
        Some(g)
    }
}

impl Iterator for TreeStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let g = self.next_unfiltered()?;
            if self.dmax.is_none_or(|d| g.max_degree() <= d) {
                return Some(g);
            }
        }
    }
}

/// Successor of a canonical level sequence in reverse lexicographic order,
/// regenerating from position `p` (the last non-leaf-at-depth-1 by default).
fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Returns `candidate` if it encodes a free tree in normal form, otherwise
/// jumps to the next sequence that does.
fn next_free_tree(candidate: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split_tree(&candidate);
    let left_height = *left.iter().max().unwrap();
    let rest_height = *rest.iter().max().unwrap();
    let valid = rest_height > left_height
        || (rest_height == left_height
            && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return candidate;
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p)).expect("a valid tree follows");
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let h = *new_left.iter().max().unwrap();
        let len = next.len();
        for (slot, level) in next[len - (h + 1)..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    next
}

/// Splits off the first subtree of the root: `(left, rest)` where `left`
/// is that subtree re-rooted at level 0 and `rest` the remaining tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&l| l - 1).collect();
    let rest = core::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let n = layout.len();
    let mut adj = vec![Vec::new(); n];
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] < level {
                break;
            }
            stack.pop();
        }
        if let Some(&j) = stack.last() {
            adj[i].push(j);
            adj[j].push(i);
        }
        stack.push(i);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Graph::from_sorted_adjacency(adj)
}

/// A member of the triangle-chain family together with its clique tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleChain {
    pub graph: Graph,
    pub profile: TriangleChainProfile,
    /// `K(G)`; vertex `i` is the `i`-th maximal clique of `graph`.
    pub clique_tree: Graph,
}

impl TriangleChain {
    pub fn from_graph(g: Graph) -> Result<Self, FamilyError> {
        let profile = triangle_chain_profile(&g)?;
        let clique_tree = clique_graph(&g);
        Ok(TriangleChain {
            graph: g,
            profile,
            clique_tree,
        })
    }

    pub fn triangles(&self) -> usize {
        self.profile.t
    }
}

/// The clique tree `K(G)` of a triangle chain.
pub fn k_map(g: &Graph) -> Result<Graph, FamilyError> {
    Ok(TriangleChain::from_graph(g.clone())?.clique_tree)
}

/// The triangle chain whose clique tree is `a`: one triangle per vertex of
/// `a`, glued along one corner per tree edge. Corner `s` of triangle `v` is
/// spent on the `s`-th neighbor of `v` in sorted order.
pub fn k_inverse(a: &Graph) -> Result<TriangleChain, FamilyError> {
    if !a.is_tree() {
        return Err(FamilyError::NotATree);
    }
    if a.max_degree() > 3 {
        return Err(FamilyError::DegreeTooLarge(a.max_degree()));
    }
    let t = a.order();
    let mut parent: Vec<usize> = (0..3 * t).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let slot = |v: usize, w: usize| 3 * v + a.neighbors(v).binary_search(&w).unwrap();
    for (u, v) in a.edges() {
        let (x, y) = (find(&mut parent, slot(u, v)), find(&mut parent, slot(v, u)));
        parent[x.max(y)] = x.min(y);
    }
    let mut id = vec![usize::MAX; 3 * t];
    let mut next = 0;
    let mut vertex = vec![0; 3 * t];
    for s in 0..3 * t {
        let r = find(&mut parent, s);
        if id[r] == usize::MAX {
            id[r] = next;
            next += 1;
        }
        vertex[s] = id[r];
    }
    debug_assert_eq!(next, 2 * t + 1);
    let edges = (0..t).flat_map(|v| {
        let c = [vertex[3 * v], vertex[3 * v + 1], vertex[3 * v + 2]];
        [(c[0], c[1]), (c[0], c[2]), (c[1], c[2])]
    });
    let g = Graph::from_edges(next, edges).expect("glued triangles form a simple graph");
    TriangleChain::from_graph(g)
}

/// Every triangle chain with `t` triangles, one per tree in `𝒜_t`.
pub fn triangle_chains(t: usize) -> Result<impl Iterator<Item = TriangleChain>, FamilyError> {
    Ok(enumerate_trees(t, Some(3))?.map(|a| k_inverse(&a).expect("trees of degree at most 3 invert")))
}

/// Whether `g` is isomorphic to the centipede on the same number of vertices.
pub fn is_centipede(g: &Graph) -> bool {
    let n = g.order();
    if n < 2 || n % 2 == 1 || g.size() != n - 1 {
        return false;
    }
    canonical_label(g) == canonical_label(&centipede(n))
}

/// Whether the tree `g` contains the spider with three legs of length two,
/// i.e. has a vertex with at least three non-leaf neighbors.
pub fn contains_obstruction_h(g: &Graph) -> Result<bool, FamilyError> {
    if !g.is_tree() {
        return Err(FamilyError::NotATree);
    }
    Ok((0..g.order()).any(|v| g.neighbors(v).iter().filter(|&&w| g.degree(w) >= 2).count() >= 3))
}
