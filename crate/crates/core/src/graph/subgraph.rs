use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::Graph;

/// The five one-triangle shapes that carry closed 7-walks inside a
/// triangle chain. Vertices 0, 1, 2 always form the triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Motif {
    /// `T`: the triangle.
    Triangle,
    /// `T1`: triangle with one pendant edge (paw).
    Paw,
    /// `T2`: triangle with two pendant edges at the same vertex (cricket).
    Cricket,
    /// `T3`: triangle with pendant edges at two distinct vertices (bull).
    Bull,
    /// `T4`: triangle with a pendant path of two edges (tadpole).
    Tadpole,
}

impl Motif {
    pub const ALL: [Motif; 5] = [
        Motif::Triangle,
        Motif::Paw,
        Motif::Cricket,
        Motif::Bull,
        Motif::Tadpole,
    ];

    pub fn graph(self) -> Graph {
        let tri = [(0, 1), (0, 2), (1, 2)];
        let (n, extra): (usize, &[(usize, usize)]) = match self {
            Motif::Triangle => (3, &[]),
            Motif::Paw => (4, &[(0, 3)]),
            Motif::Cricket => (5, &[(0, 3), (0, 4)]),
            Motif::Bull => (5, &[(0, 3), (1, 4)]),
            Motif::Tadpole => (5, &[(0, 3), (3, 4)]),
        };
        Graph::from_edges(n, tri.iter().chain(extra).copied()).unwrap()
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Motif::Triangle => "T",
            Motif::Paw => "T1",
            Motif::Cricket => "T2",
            Motif::Bull => "T3",
            Motif::Tadpole => "T4",
        }
    }
}

impl fmt::Display for Motif {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Number of injective maps `V(pattern) -> V(host)` sending edges to edges.
pub fn count_embeddings(pattern: &Graph, host: &Graph) -> u64 {
    let k = pattern.order();
    if k > host.order() {
        return 0;
    }
    if k == 0 {
        return 1;
    }
    // visit pattern vertices so each (after the first of its component) has
    // an already-placed neighbor
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    for s in 0..k {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let start = order.len();
        order.push(s);
        let mut i = start;
        while i < order.len() {
            for &w in pattern.neighbors(order[i]) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    let mut position = vec![0; k];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // earlier neighbors of each pattern vertex, by position
    let back: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| {
            pattern
                .neighbors(v)
                .iter()
                .map(|&w| position[w])
                .filter(|&p| p < position[v])
                .collect()
        })
        .collect();
    let degree: Vec<usize> = order.iter().map(|&v| pattern.degree(v)).collect();
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; host.order()];
    extend(host, &back, &degree, 0, &mut image, &mut used)
}

fn extend(
    host: &Graph,
    back: &[Vec<usize>],
    degree: &[usize],
    i: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> u64 {
    if i == back.len() {
        return 1;
    }
    let mut total = 0;
    let try_vertex = |h: usize, image: &mut [usize], used: &mut [bool]| {
        if used[h]
            || host.degree(h) < degree[i]
            || !back[i].iter().all(|&p| host.has_edge(image[p], h))
        {
            return 0;
        }
        image[i] = h;
        used[h] = true;
        let c = extend(host, back, degree, i + 1, image, used);
        used[h] = false;
        c
    };
    match back[i].first() {
        Some(&anchor) => {
            for &h in host.neighbors(image[anchor]) {
                total += try_vertex(h, image, used);
            }
        }
        None => {
            for h in 0..host.order() {
                total += try_vertex(h, image, used);
            }
        }
    }
    total
}

pub fn automorphism_count(g: &Graph) -> u64 {
    count_embeddings(g, g)
}

/// Number of distinct (not necessarily induced) subgraphs of `host`
/// isomorphic to `pattern`, for a pattern without isolated vertices.
pub fn count_subgraphs(host: &Graph, pattern: &Graph) -> u64 {
    count_embeddings(pattern, host) / automorphism_count(pattern)
}
