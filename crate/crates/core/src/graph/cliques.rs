use alloc::vec;
use alloc::vec::Vec;

use super::Graph;

/// All maximal cliques, each as a sorted vertex list, in discovery order of
/// a pivoting Bron–Kerbosch search. Isolated vertices are cliques of size 1.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let candidates: Vec<usize> = (0..g.order()).collect();
    let mut current = Vec::new();
    expand(g, &mut current, candidates, Vec::new(), &mut out);
    out
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

// `p` and `x` stay sorted throughout.
fn expand(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: Vec<usize>,
    mut x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            let mut clique = r.clone();
            clique.sort_unstable();
            out.push(clique);
        }
        return;
    }
    // pivot: vertex of P ∪ X with the most neighbors in P
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| (intersect(&p, g.neighbors(u)).len(), core::cmp::Reverse(u)))
        .unwrap();
    let todo: Vec<usize> = p
        .iter()
        .copied()
        .filter(|&v| !g.has_edge(pivot, v))
        .collect();
    for v in todo {
        let nv = g.neighbors(v);
        r.push(v);
        expand(g, r, intersect(&p, nv), intersect(&x, nv), out);
        r.pop();
        p.retain(|&w| w != v);
        let pos = x.binary_search(&v).unwrap_err();
        x.insert(pos, v);
    }
}

/// Clique graph `K(G)`: one vertex per maximal clique (in the order of
/// [`maximal_cliques`]), adjacent when the cliques share a vertex of `G`.
pub fn clique_graph(g: &Graph) -> Graph {
    let cliques = maximal_cliques(g);
    let k = cliques.len();
    let mut adj = vec![Vec::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            if !intersect(&cliques[i], &cliques[j]).is_empty() {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    // pushes happen in increasing order, so lists are already sorted
    Graph::from_sorted_adjacency(adj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build, path, Family};

    fn brute_force_maximal(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.order();
        let is_clique = |mask: u32| {
            (0..n).all(|u| {
                mask & (1 << u) == 0
                    || (u + 1..n).all(|v| mask & (1 << v) == 0 || g.has_edge(u, v))
            })
        };
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            if is_clique(mask) && (0..n).all(|w| mask & (1 << w) != 0 || !is_clique(mask | (1 << w))) {
                out.push((0..n).filter(|&v| mask & (1 << v) != 0).collect());
            }
        }
        out.sort();
        out
    }

    #[test]
    fn clique_graphs_of_small_graphs() {
        let bowtie =
            Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(clique_graph(&bowtie), path(2));
        let k3 = build(Family::Complete, 3).unwrap();
        assert_eq!(clique_graph(&k3), Graph::empty(1));
    }

    #[test]
    fn matches_brute_force() {
        let graphs = [
            build(Family::Complete, 5).unwrap(),
            build(Family::Cycle, 6).unwrap(),
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]).unwrap(),
            Graph::empty(3),
            build(Family::Star, 5).unwrap().complement(),
        ];
        for g in &graphs {
            let mut got = maximal_cliques(g);
            got.sort();
            assert_eq!(got, brute_force_maximal(g), "{g:?}");
        }
    }
}
