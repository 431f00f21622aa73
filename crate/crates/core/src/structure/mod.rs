//! Structural algorithms the colorers rely on.

mod ears;
mod hamiltonian;
mod minimal;
mod trees;

pub use ears::{ear_decomposition, EarDecomposition};
pub use hamiltonian::{hamiltonian_path, is_hamiltonian_path};
pub use minimal::{is_minimally_2_connected, minimally_2connected_spanning};
pub use trees::{is_tree, max_subtree_size_with_diameter, RootedTree, Subtree, SubtreeCenter};

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// BFS distances from `source`; `None` marks unreachable vertices.
pub fn distances(graph: &Graph, source: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; graph.n()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for w in graph.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn eccentricity(graph: &Graph, v: Vertex) -> Result<usize> {
    distances(graph, v)
        .into_iter()
        .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
        .ok_or_else(|| Error::Precondition("eccentricity needs a connected graph".into()))
}

pub fn radius(graph: &Graph) -> Result<usize> {
    (0..graph.n())
        .map(|v| eccentricity(graph, v))
        .try_fold(usize::MAX, |acc, e| e.map(|e| acc.min(e)))
}

pub fn diameter(graph: &Graph) -> Result<usize> {
    (0..graph.n())
        .map(|v| eccentricity(graph, v))
        .try_fold(0, |acc, e| e.map(|e| acc.max(e)))
}

/// σ′₂: the largest `deg(x) + deg(y)` over edges `xy`.
pub fn sigma2_prime(graph: &Graph) -> Result<usize> {
    graph
        .edges()
        .iter()
        .map(|&(u, v)| graph.degree(u) + graph.degree(v))
        .max()
        .ok_or_else(|| Error::Precondition("σ′₂ needs at least one edge".into()))
}

pub fn is_connected(graph: &Graph) -> bool {
    distances(graph, 0).iter().all(Option::is_some)
}

/// Cut vertices, ascending. Iterative lowpoint DFS.
pub fn articulation_points(graph: &Graph) -> Vec<Vertex> {
    let n = graph.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        // (vertex, parent edge, next incident index)
        let mut stack: Vec<(Vertex, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent_edge, ref mut next)) = stack.last_mut() {
            if let Some(&(w, id)) = graph.incident(v).get(*next) {
                *next += 1;
                if id == parent_edge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, id, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// 2-connected: at least three vertices, connected, no cut vertex.
pub fn is_2_connected(graph: &Graph) -> bool {
    graph.n() >= 3 && is_connected(graph) && articulation_points(graph).is_empty()
}
