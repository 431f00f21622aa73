use std::collections::VecDeque;

use super::{ConstructionReport, Theorem};
use crate::error::{Error, Result};
use crate::graph::{Color, EdgeId, Graph};
use crate::structure::{distances, is_tree, max_subtree_size_with_diameter, SubtreeCenter};
use crate::verify::WindowParam;

/// Optimal distance-ℓ coloring of a tree.
///
/// Every path of a tree is the only path between its ends, so two edges
/// conflict exactly when some path through both has length at most `ℓ + 1`.
/// The edges of a largest subtree of diameter `ℓ + 1` pairwise conflict,
/// which gives the lower bound. Edges are colored greedily in BFS order
/// outward from that subtree's center (a vertex for odd `ℓ`, an edge for even
/// `ℓ`); for `ℓ = 2` the center edge is an edge `xy` maximizing
/// `deg(x) + deg(y)`. Each edge's earlier conflicts all lie in one ball of
/// diameter `ℓ + 1`, so the greedy never needs more colors than the bound.
pub fn color_tree(tree: &Graph, ell: WindowParam) -> Result<ConstructionReport> {
    if !is_tree(tree) {
        return Err(Error::Precondition("graph is not a tree".into()));
    }
    if tree.m() == 0 {
        return Err(Error::Precondition("tree needs at least one edge".into()));
    }
    let reach = ell.get() + 1;
    let best = max_subtree_size_with_diameter(tree, reach)?;
    let claimed = best.size();

    let mut order: Vec<EdgeId> = Vec::with_capacity(tree.m());
    let mut seen = vec![false; tree.n()];
    let mut queue = VecDeque::new();
    match best.center {
        SubtreeCenter::Vertex(c) => {
            seen[c] = true;
            queue.push_back(c);
        }
        SubtreeCenter::Edge(a, b) => {
            seen[a] = true;
            seen[b] = true;
            order.push(tree.edge_id(a, b).unwrap());
            queue.extend([a, b]);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &(w, id) in tree.incident(u) {
            if !seen[w] {
                seen[w] = true;
                order.push(id);
                queue.push_back(w);
            }
        }
    }

    let dist: Vec<Vec<usize>> = (0..tree.n())
        .map(|v| distances(tree, v).into_iter().map(Option::unwrap).collect())
        .collect();
    let conflict = |e: EdgeId, f: EdgeId| {
        let (a, b) = tree.edge(e);
        let (c, d) = tree.edge(f);
        let span = dist[a][c].max(dist[a][d]).max(dist[b][c]).max(dist[b][d]);
        span <= reach
    };

    let mut colors: Vec<Color> = vec![0; tree.m()];
    let mut used = vec![false; claimed + 2];
    for (k, &e) in order.iter().enumerate() {
        used.iter_mut().for_each(|u| *u = false);
        for &f in &order[..k] {
            if conflict(e, f) {
                used[colors[f]] = true;
            }
        }
        let c = (1..).find(|&c| c >= used.len() || !used[c]).unwrap();
        if c > claimed {
            return Err(Error::Invariant(format!(
                "tree greedy needed color {c} at edge {:?}, bound is {claimed}",
                tree.edge(e)
            )));
        }
        colors[e] = c;
    }
    let notes = match best.center {
        SubtreeCenter::Vertex(c) => format!("rainbow ball around vertex {c}"),
        SubtreeCenter::Edge(a, b) => format!("rainbow ball around edge {a} {b}"),
    };
    ConstructionReport::new(colors, claimed, Theorem::Tree, notes)
}
