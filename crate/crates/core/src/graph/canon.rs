//! Canonical labels: equal labels exactly when two graphs are isomorphic.
//!
//! Forests get an AHU parenthesis encoding rooted at component centers.
//! Everything else goes through color refinement followed by an
//! individualization search that keeps the lexicographically largest
//! adjacency code over all leaves. Automorphisms discovered along the way
//! (two leaves with equal codes) prune the search: sibling vertices in the
//! same orbit of the pointwise stabilizer of the current path are skipped,
//! and a leaf equal to an earlier one sends the search back to the level
//! where the two paths diverged.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::Graph;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalLabel(Vec<u8>);

impl CanonicalLabel {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalLabel(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

pub fn canonical_label(g: &Graph) -> CanonicalLabel {
    if g.is_forest() {
        let mut bytes = vec![b'F'];
        bytes.extend(forest_code(g));
        CanonicalLabel(bytes)
    } else {
        let mut bytes = vec![b'G'];
        bytes.extend_from_slice(&(g.order() as u32).to_be_bytes());
        bytes.extend(Search::new(g).run());
        CanonicalLabel(bytes)
    }
}

// ---------------------------------------------------------------- forests

fn forest_code(g: &Graph) -> Vec<u8> {
    let (count, comp) = g.component_ids();
    let mut members = vec![Vec::new(); count];
    for (v, &c) in comp.iter().enumerate() {
        members[c].push(v);
    }
    let mut codes: Vec<Vec<u8>> = members.iter().map(|vs| tree_code(g, vs)).collect();
    codes.sort_unstable();
    codes.concat()
}

fn tree_centers(g: &Graph, vertices: &[usize]) -> Vec<usize> {
    if vertices.len() <= 2 {
        return vertices.to_vec();
    }
    let mut deg: Vec<usize> = vertices.iter().map(|&v| g.degree(v)).collect();
    let index = |v: usize| vertices.binary_search(&v).unwrap();
    let mut layer: Vec<usize> = vertices
        .iter()
        .copied()
        .filter(|&v| g.degree(v) <= 1)
        .collect();
    let mut remaining = vertices.len();
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            deg[index(leaf)] = 0;
            for &w in g.neighbors(leaf) {
                let i = index(w);
                if deg[i] > 0 {
                    deg[i] -= 1;
                    if deg[i] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(g: &Graph, root: usize) -> Vec<u8> {
    // BFS order, then assemble codes children-first
    let mut order = vec![root];
    let mut parent = vec![(root, usize::MAX)];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        let p = parent[i].1;
        for &w in g.neighbors(v) {
            if w != p {
                order.push(w);
                parent.push((w, v));
            }
        }
        i += 1;
    }
    let pos = |v: usize| order.iter().position(|&x| x == v).unwrap();
    let mut child_codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); order.len()];
    let mut root_code = Vec::new();
    for idx in (0..order.len()).rev() {
        let mut kids = core::mem::take(&mut child_codes[idx]);
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for k in kids {
            code.extend(k);
        }
        code.push(b')');
        let p = parent[idx].1;
        if p == usize::MAX {
            root_code = code;
        } else {
            child_codes[pos(p)].push(code);
        }
    }
    root_code
}

fn tree_code(g: &Graph, vertices: &[usize]) -> Vec<u8> {
    tree_centers(g, vertices)
        .into_iter()
        .map(|c| rooted_code(g, c))
        .min()
        .unwrap_or_default()
}

// ---------------------------------------------------------------- general

type Partition = Vec<Vec<usize>>;

/// Splits cells by the multiset of neighbor cell indices until stable.
/// Cell order only depends on the isomorphism class of (graph, partition).
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    let n = g.order();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut next: Partition = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig: Vec<usize> = g.neighbors(v).iter().map(|&w| cell_of[w]).collect();
                    sig.sort_unstable();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    let mut part: Vec<usize> = keyed[start..i].iter().map(|k| k.1).collect();
                    part.sort_unstable();
                    next.push(part);
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn individualize(cells: &Partition, idx: usize, v: usize) -> Partition {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend_from_slice(&cells[..idx]);
    out.push(vec![v]);
    out.push(cells[idx].iter().copied().filter(|&w| w != v).collect());
    out.extend_from_slice(&cells[idx + 1..]);
    out
}

struct Leaf {
    code: Vec<u8>,
    order: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search {
            g,
            first: None,
            best: None,
            generators: Vec::new(),
        }
    }

    fn run(mut self) -> Vec<u8> {
        let start = vec![(0..self.g.order()).collect::<Vec<_>>()];
        let mut path = Vec::new();
        self.descend(start, &mut path);
        self.best.map(|l| l.code).unwrap_or_default()
    }

    fn leaf_code(&self, order: &[usize]) -> Vec<u8> {
        let n = order.len();
        let bits = n * n.saturating_sub(1) / 2;
        let mut code = vec![0u8; bits.div_ceil(8)];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.g.has_edge(order[i], order[j]) {
                    code[k / 8] |= 0x80 >> (k % 8);
                }
                k += 1;
            }
        }
        code
    }

    /// Returns `Some(level)` to abandon the search up to the node at depth `level`.
    fn descend(&mut self, cells: Partition, path: &mut Vec<usize>) -> Option<usize> {
        let cells = refine(self.g, cells);
        let Some(target) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
        else {
            let order: Vec<usize> = cells.into_iter().flatten().collect();
            return self.visit_leaf(order, path);
        };
        let level = path.len();
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() && self.same_orbit(v, &explored, path) {
                continue;
            }
            path.push(v);
            let jump = self.descend(individualize(&cells, target, v), path);
            path.pop();
            explored.push(v);
            if let Some(l) = jump {
                if l < level {
                    return Some(l);
                }
            }
        }
        None
    }

    fn visit_leaf(&mut self, order: Vec<usize>, path: &[usize]) -> Option<usize> {
        let code = self.leaf_code(&order);
        let leaf = Leaf {
            code,
            order,
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                code: leaf.code.clone(),
                order: leaf.order.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        for reference in [first, self.best.as_ref().unwrap()] {
            if reference.code == leaf.code {
                let mut gamma = vec![0; leaf.order.len()];
                for (a, b) in reference.order.iter().zip(&leaf.order) {
                    gamma[*a] = *b;
                }
                let diverge = reference
                    .path
                    .iter()
                    .zip(&leaf.path)
                    .position(|(a, b)| a != b)
                    .unwrap_or(leaf.path.len());
                self.generators.push(gamma);
                return Some(diverge);
            }
        }
        if leaf.code > self.best.as_ref().unwrap().code {
            self.best = Some(leaf);
        }
        None
    }

    fn same_orbit(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.generators {
            if path.iter().all(|&p| gamma[p] == p) {
                any = true;
                for (x, &y) in gamma.iter().enumerate() {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                    if rx != ry {
                        parent[rx] = ry;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build, path, Family};
    use alloc::collections::BTreeSet;

    /// Sends vertex `i` to `(a*i + b) mod n`, a permutation when gcd(a, n) = 1.
    fn affine_perm(n: usize, a: usize, b: usize) -> Vec<usize> {
        (0..n).map(|i| (a * i + b) % n).collect()
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn relabel_invariance() {
        let graphs = [
            path(4),
            build(Family::Complete, 7).unwrap(),
            build(Family::Cycle, 9).unwrap(),
            build(Family::Cycle, 6).unwrap().complement(),
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap(),
        ];
        for g in &graphs {
            let n = g.order();
            let label = canonical_label(g);
            for a in 1..n {
                if gcd(a, n) != 1 {
                    continue;
                }
                for b in 0..n {
                    assert_eq!(canonical_label(&g.relabel(&affine_perm(n, a, b))), label);
                }
            }
        }
    }

    #[test]
    fn distinguishes_small_trees() {
        let claw = build(Family::Star, 4).unwrap();
        assert_ne!(canonical_label(&path(4)), canonical_label(&claw));
    }

    #[test]
    fn distinguishes_cospectral_pair() {
        // K_{1,4} and C_4 + K_1 share an adjacency spectrum but are not isomorphic
        let star = build(Family::Star, 5).unwrap();
        let c4k1 = build(Family::Cycle, 4).unwrap().disjoint_union(&Graph::empty(1));
        assert_ne!(canonical_label(&star), canonical_label(&c4k1));
        // two non-isomorphic 3-regular graphs on 6 vertices: K_{3,3} and the prism
        let k33 = Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        let prism = Graph::from_edges(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert_ne!(canonical_label(&k33), canonical_label(&prism));
    }

    #[test]
    fn all_graphs_on_five_vertices() {
        // 34 isomorphism classes of graphs on 5 vertices
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let labels: BTreeSet<CanonicalLabel> = (0u32..1 << pairs.len())
            .map(|mask| {
                let edges = pairs.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e);
                canonical_label(&Graph::from_edges(5, edges).unwrap())
            })
            .collect();
        assert_eq!(labels.len(), 34);
    }

    #[test]
    fn large_symmetric_graphs_finish() {
        let k = build(Family::Complete, 24).unwrap();
        assert_eq!(canonical_label(&k), canonical_label(&k.relabel(&affine_perm(24, 5, 3))));
        let c = build(Family::Cycle, 40).unwrap();
        assert_eq!(canonical_label(&c), canonical_label(&c.relabel(&affine_perm(40, 7, 11))));
    }
}
