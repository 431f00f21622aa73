//! Greedy coloring driven by "this walk must be distance-ℓ proper" demands.
//!
//! Edges are grouped into units that share one color. Every demanded walk
//! turns each pair of its edges at most `ℓ` positions apart into a
//! must-differ constraint between their units. Units are then colored in
//! creation order with the lowest palette color that no already colored
//! neighbour uses.

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeId, Graph, Vertex};

struct Unit {
    palette: Vec<Color>,
    neighbours: Vec<usize>,
}

pub(crate) struct TemplateEngine<'g> {
    graph: &'g Graph,
    ell: usize,
    unit_of: Vec<Option<usize>>,
    units: Vec<Unit>,
    self_conflict: Option<(EdgeId, EdgeId)>,
}

impl<'g> TemplateEngine<'g> {
    pub fn new(graph: &'g Graph, ell: usize) -> Self {
        TemplateEngine {
            graph,
            ell,
            unit_of: vec![None; graph.m()],
            units: Vec::new(),
            self_conflict: None,
        }
    }

    /// Registers edges that must share a color drawn from `palette`. Edges
    /// already in a unit are skipped.
    pub fn unit(&mut self, edges: impl IntoIterator<Item = EdgeId>, palette: &[Color]) {
        let idx = self.units.len();
        let mut any = false;
        for e in edges {
            if self.unit_of[e].is_none() {
                self.unit_of[e] = Some(idx);
                any = true;
            }
        }
        if any {
            self.units.push(Unit {
                palette: palette.to_vec(),
                neighbours: Vec::new(),
            });
        }
    }

    pub fn edge(&self, u: Vertex, v: Vertex) -> EdgeId {
        self.graph
            .edge_id(u, v)
            .unwrap_or_else(|| panic!("template walk uses non-edge {u} {v}"))
    }

    /// Demands that the walk through `vertices` be distance-ℓ proper.
    pub fn demand(&mut self, vertices: &[Vertex]) {
        let ids: Vec<EdgeId> = vertices.windows(2).map(|w| self.edge(w[0], w[1])).collect();
        for (j, &f) in ids.iter().enumerate() {
            for &e in &ids[j.saturating_sub(self.ell)..j] {
                match (self.unit_of[e], self.unit_of[f]) {
                    (Some(a), Some(b)) if a == b => {
                        self.self_conflict.get_or_insert((e, f));
                    }
                    (Some(a), Some(b)) => {
                        self.units[a].neighbours.push(b);
                        self.units[b].neighbours.push(a);
                    }
                    _ => {}
                }
            }
        }
    }

    /// Colors every unit; edges outside all units get `None`.
    pub fn solve(mut self) -> Result<Vec<Option<Color>>> {
        if let Some((e, f)) = self.self_conflict {
            return Err(Error::Invariant(format!(
                "edges {:?} and {:?} share a color but must differ",
                self.graph.edge(e),
                self.graph.edge(f)
            )));
        }
        let mut color: Vec<Option<Color>> = vec![None; self.units.len()];
        for i in 0..self.units.len() {
            let unit = &mut self.units[i];
            unit.neighbours.sort_unstable();
            unit.neighbours.dedup();
            let taken: Vec<Color> = unit.neighbours.iter().filter_map(|&j| color[j]).collect();
            let pick = unit.palette.iter().copied().find(|c| !taken.contains(c));
            match pick {
                Some(c) => color[i] = Some(c),
                None => {
                    return Err(Error::Invariant(format!(
                        "no admissible color for unit {i}: palette {:?}, taken {taken:?}",
                        unit.palette
                    )))
                }
            }
        }
        Ok(self.unit_of.iter().map(|u| u.and_then(|u| color[u])).collect())
    }
}
