use std::collections::VecDeque;

use super::{is_2_connected, is_minimally_2_connected};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// An open ear decomposition `C_r = G_0 ⊂ G_1 ⊂ … ⊂ G_s = G`.
///
/// `base_cycle` lists the cycle's vertices in order (the closing edge joins
/// the last vertex to the first). Each ear is a vertex sequence whose two
/// endpoints already belong to the previous graph and whose internal vertices
/// are new.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarDecomposition {
    pub base_cycle: Vec<Vertex>,
    pub ears: Vec<Vec<Vertex>>,
}

impl EarDecomposition {
    /// Checks every structural invariant against `graph`.
    pub fn validate(&self, graph: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::Invariant(msg));
        let r = self.base_cycle.len();
        if r < 3 {
            return bad(format!("base cycle has length {r}"));
        }
        let mut in_graph = vec![false; graph.n()];
        let mut used = vec![false; graph.m()];
        let mark_edge = |u: Vertex, v: Vertex, used: &mut Vec<bool>| -> Result<()> {
            match graph.edge_id(u, v) {
                Some(id) if !used[id] => {
                    used[id] = true;
                    Ok(())
                }
                Some(_) => Err(Error::Invariant(format!("edge {u} {v} used twice"))),
                None => Err(Error::Invariant(format!("{u} {v} is not an edge"))),
            }
        };
        for i in 0..r {
            let v = self.base_cycle[i];
            if in_graph[v] {
                return bad(format!("base cycle repeats vertex {v}"));
            }
            in_graph[v] = true;
            mark_edge(v, self.base_cycle[(i + 1) % r], &mut used)?;
        }
        for (k, ear) in self.ears.iter().enumerate() {
            if ear.len() < 2 {
                return bad(format!("ear {k} has fewer than two vertices"));
            }
            let (first, last) = (ear[0], ear[ear.len() - 1]);
            if !in_graph[first] || !in_graph[last] || first == last {
                return bad(format!("ear {k} must join two distinct existing vertices"));
            }
            for &x in &ear[1..ear.len() - 1] {
                if in_graph[x] {
                    return bad(format!("ear {k} reuses vertex {x} internally"));
                }
                in_graph[x] = true;
            }
            for w in ear.windows(2) {
                mark_edge(w[0], w[1], &mut used)?;
            }
        }
        if in_graph.iter().any(|&b| !b) || used.iter().any(|&b| !b) {
            return bad("decomposition does not cover the graph".into());
        }
        Ok(())
    }

    /// Number of internal vertices of each ear.
    pub fn internal_counts(&self) -> impl Iterator<Item = usize> + '_ {
        self.ears.iter().map(|e| e.len() - 2)
    }
}

/// Ear decomposition by repeated shortest ears.
///
/// The base cycle closes the lexicographically smallest edge with a shortest
/// detour. Afterwards the smallest covered vertex with an uncovered edge
/// starts a BFS through uncovered vertices until another covered vertex is
/// reached. Single-edge ears (chords) only occur in graphs that are not
/// minimally 2-connected; on a minimally 2-connected input a chord is
/// reported as an invariant violation.
pub fn ear_decomposition(graph: &Graph) -> Result<EarDecomposition> {
    if !is_2_connected(graph) {
        return Err(Error::Precondition(
            "ear decomposition needs a 2-connected graph".into(),
        ));
    }
    let n = graph.n();
    let mut edge_done = vec![false; graph.m()];
    let mut covered = vec![false; n];

    let first = (0..graph.m())
        .min_by_key(|&id| graph.edge(id))
        .expect("2-connected graphs have edges");
    let (a, b) = graph.edge(first);
    let detour = shortest_path_avoiding(graph, a, b, first)
        .ok_or_else(|| Error::Invariant(format!("edge {a} {b} lies on no cycle")))?;
    for w in detour.windows(2) {
        edge_done[graph.edge_id(w[0], w[1]).unwrap()] = true;
    }
    edge_done[first] = true;
    detour.iter().for_each(|&v| covered[v] = true);
    let base_cycle = detour;

    let mut ears = Vec::new();
    let mut remaining = edge_done.iter().filter(|&&d| !d).count();
    let mut minimal: Option<bool> = None;
    while remaining > 0 {
        let start = (0..n)
            .find(|&v| covered[v] && graph.incident(v).iter().any(|&(_, id)| !edge_done[id]))
            .ok_or_else(|| Error::Invariant("uncovered edges unreachable from the cover".into()))?;
        let ear = shortest_ear(graph, start, &covered, &edge_done).ok_or_else(|| {
            Error::Invariant(format!("no ear starts at vertex {start} in a 2-connected graph"))
        })?;
        if ear.len() == 2 && *minimal.get_or_insert_with(|| is_minimally_2_connected(graph)) {
            return Err(Error::Invariant(format!(
                "ear {} ({} {}) has no internal vertex in a minimally 2-connected graph",
                ears.len(),
                ear[0],
                ear[1]
            )));
        }
        for w in ear.windows(2) {
            edge_done[graph.edge_id(w[0], w[1]).unwrap()] = true;
            remaining -= 1;
        }
        ear.iter().for_each(|&v| covered[v] = true);
        ears.push(ear);
    }
    Ok(EarDecomposition { base_cycle, ears })
}

fn shortest_path_avoiding(graph: &Graph, from: Vertex, to: Vertex, banned: usize) -> Option<Vec<Vertex>> {
    let mut prev = vec![usize::MAX; graph.n()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &(w, id) in graph.incident(u) {
            if id == banned || prev[w] != usize::MAX {
                continue;
            }
            prev[w] = u;
            if w == to {
                return Some(unwind(&prev, from, to));
            }
            queue.push_back(w);
        }
    }
    None
}

fn shortest_ear(graph: &Graph, start: Vertex, covered: &[bool], edge_done: &[bool]) -> Option<Vec<Vertex>> {
    let mut prev = vec![usize::MAX; graph.n()];
    prev[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &(w, id) in graph.incident(u) {
            if edge_done[id] || w == start || prev[w] != usize::MAX {
                continue;
            }
            prev[w] = u;
            if covered[w] {
                return Some(unwind(&prev, start, w));
            }
            queue.push_back(w);
        }
    }
    None
}

fn unwind(prev: &[usize], from: Vertex, to: Vertex) -> Vec<Vertex> {
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[cur];
        path.push(cur);
    }
    path.reverse();
    path
}
