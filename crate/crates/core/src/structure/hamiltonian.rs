use super::is_connected;
use crate::graph::{Graph, Vertex};

/// True iff `path` visits every vertex exactly once along edges of `graph`.
pub fn is_hamiltonian_path(graph: &Graph, path: &[Vertex]) -> bool {
    if path.len() != graph.n() {
        return false;
    }
    let mut seen = vec![false; graph.n()];
    for &v in path {
        if v >= graph.n() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    path.windows(2).all(|w| graph.has_edge(w[0], w[1]))
}

/// Backtracking search for a Hamiltonian path. Intended for `n` up to about 20.
pub fn hamiltonian_path(graph: &Graph) -> Option<Vec<Vertex>> {
    let n = graph.n();
    if n == 1 {
        return Some(vec![0]);
    }
    if !is_connected(graph) {
        return None;
    }
    let leaves: Vec<Vertex> = (0..n).filter(|&v| graph.degree(v) == 1).collect();
    if leaves.len() > 2 {
        return None;
    }
    // A degree-1 vertex must be an endpoint, so start there if one exists.
    let starts: Vec<Vertex> = if leaves.is_empty() { (0..n).collect() } else { leaves };
    let mut search = Search {
        graph,
        visited: vec![false; n],
        free_degree: (0..n).map(|v| graph.degree(v)).collect(),
        path: Vec::with_capacity(n),
    };
    starts.into_iter().find_map(|s| {
        search.enter(s);
        let found = search.extend();
        if found {
            return Some(search.path.clone());
        }
        search.leave(s);
        None
    })
}

struct Search<'g> {
    graph: &'g Graph,
    visited: Vec<bool>,
    /// Unvisited neighbours of each vertex.
    free_degree: Vec<usize>,
    path: Vec<Vertex>,
}

impl Search<'_> {
    fn enter(&mut self, v: Vertex) {
        self.visited[v] = true;
        self.path.push(v);
        for w in self.graph.neighbors(v) {
            self.free_degree[w] -= 1;
        }
    }

    fn leave(&mut self, v: Vertex) {
        self.visited[v] = false;
        self.path.pop();
        for w in self.graph.neighbors(v) {
            self.free_degree[w] += 1;
        }
    }

    fn extend(&mut self) -> bool {
        if self.path.len() == self.graph.n() {
            return true;
        }
        let end = *self.path.last().unwrap();
        // An unvisited vertex with no unvisited neighbour can only be the
        // final vertex, reached from the current end; more than one such
        // vertex, or one not adjacent to the end, is a dead end.
        let mut forced = None;
        for v in 0..self.graph.n() {
            if !self.visited[v] && self.free_degree[v] == 0 {
                if forced.is_some() || !self.graph.has_edge(end, v) {
                    return false;
                }
                forced = Some(v);
            }
        }
        let candidates: Vec<Vertex> = match forced {
            Some(v) if self.path.len() + 1 == self.graph.n() => vec![v],
            Some(_) => return false,
            None => self
                .graph
                .neighbors(end)
                .filter(|&w| !self.visited[w])
                .collect(),
        };
        for w in candidates {
            self.enter(w);
            if self.extend() {
                return true;
            }
            self.leave(w);
        }
        false
    }
}
