use super::is_2_connected;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A spanning subgraph that is 2-connected but loses 2-connectivity when any
/// edge is removed.
///
/// Edges are scanned once in ascending `(u, v)` order and dropped whenever the
/// rest stays 2-connected. One pass suffices: an edge that is critical when
/// scanned stays critical after further removals.
pub fn minimally_2connected_spanning(graph: &Graph) -> Result<Graph> {
    if !is_2_connected(graph) {
        return Err(Error::Precondition(
            "minimal reduction needs a 2-connected graph".into(),
        ));
    }
    let mut order: Vec<usize> = (0..graph.m()).collect();
    order.sort_by_key(|&id| graph.edge(id));
    let mut kept = vec![true; graph.m()];
    for id in order {
        kept[id] = false;
        let trial = graph.spanning_subgraph(|e| kept[e]);
        if !is_2_connected(&trial) {
            kept[id] = true;
        }
    }
    Ok(graph.spanning_subgraph(|e| kept[e]))
}

pub fn is_minimally_2_connected(graph: &Graph) -> bool {
    is_2_connected(graph)
        && (0..graph.m()).all(|id| !is_2_connected(&graph.spanning_subgraph(|e| e != id)))
}
