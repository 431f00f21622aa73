//! Simple undirected graphs, edge colorings and their text formats.

mod family;
mod io;
mod ops;

pub use family::{generate, Family};
pub use io::{read_coloring, read_graph, write_coloring, write_graph};
pub use ops::{cartesian_product, join, permutation_graph, Permutation};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Index of an edge in [`Graph::edges`].
pub type EdgeId = usize;

/// Color values are 1-based: a `t`-coloring uses values in `1..=t`.
pub type Color = usize;

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Edges keep the order they were supplied in; that order is the edge order of
/// the text formats and the index space of [`EdgeColoring`]. Each edge is
/// stored normalised with its smaller endpoint first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("a graph needs at least one vertex".into()));
        }
        let mut normalised = Vec::new();
        let mut adj: Vec<Vec<(Vertex, EdgeId)>> = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            let id = normalised.len();
            normalised.push((a, b));
            adj[a].push((b, id));
            adj[b].push((a, id));
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                let (a, b) = if v < w[0].0 { (v, w[0].0) } else { (w[0].0, v) };
                return Err(Error::InvalidInput(format!("duplicate edge ({a}, {b})")));
            }
        }
        Ok(Graph {
            n,
            edges: normalised,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    /// Neighbours of `v` with the connecting edge id, sorted by neighbour.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let list = &self.adj[u];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * (self.n - 1) / 2
    }

    /// The spanning subgraph keeping the edges for which `keep` is true, in
    /// their original relative order.
    pub fn spanning_subgraph(&self, mut keep: impl FnMut(EdgeId) -> bool) -> Graph {
        let edges: Vec<_> = (0..self.m())
            .filter(|&id| keep(id))
            .map(|id| self.edges[id])
            .collect();
        Graph::new(self.n, edges).expect("subgraph of a valid graph is valid")
    }

    /// Edge ids along a vertex sequence, or `None` if consecutive vertices are
    /// not adjacent.
    pub fn path_edges(&self, path: &[Vertex]) -> Option<Vec<EdgeId>> {
        path.windows(2).map(|w| self.edge_id(w[0], w[1])).collect()
    }
}

/// A total map from the edges of a graph to colors in `1..=num_colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<Color>,
    num_colors: usize,
}

impl EdgeColoring {
    /// Wraps per-edge colors; `num_colors` is the palette size `t`.
    pub fn new(colors: Vec<Color>, num_colors: usize) -> Result<Self> {
        if num_colors == 0 {
            return Err(Error::InvalidParameter("palette must have at least one color".into()));
        }
        if let Some((id, &c)) = colors
            .iter()
            .enumerate()
            .find(|&(_, &c)| c == 0 || c > num_colors)
        {
            return Err(Error::InvalidInput(format!(
                "edge {id} has color {c} outside 1..={num_colors}"
            )));
        }
        Ok(EdgeColoring { colors, num_colors })
    }

    /// Palette size is the largest color present (at least 1).
    pub fn from_colors(colors: Vec<Color>) -> Result<Self> {
        let t = colors.iter().copied().max().unwrap_or(1).max(1);
        Self::new(colors, t)
    }

    /// Every edge gets color 1.
    pub fn uniform(m: usize) -> Self {
        EdgeColoring {
            colors: vec![1; m],
            num_colors: 1,
        }
    }

    pub fn color(&self, id: EdgeId) -> Color {
        self.colors[id]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn distinct_colors(&self) -> usize {
        let mut seen = vec![false; self.num_colors + 1];
        self.colors.iter().for_each(|&c| seen[c] = true);
        seen.iter().filter(|&&s| s).count()
    }

    /// Relabels colors in order of first use so that exactly the used colors
    /// remain, numbered `1..=k`.
    pub fn canonical(&self) -> EdgeColoring {
        let mut map = vec![0; self.num_colors + 1];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c] == 0 {
                    next += 1;
                    map[c] = next;
                }
                map[c]
            })
            .collect();
        EdgeColoring {
            colors,
            num_colors: next.max(1),
        }
    }

    /// Applies a color bijection given as `perm[c - 1]` for each color `c`.
    pub fn recolor(&self, perm: &[Color]) -> Result<EdgeColoring> {
        if perm.len() != self.num_colors {
            return Err(Error::InvalidParameter(format!(
                "recoloring needs {} images, got {}",
                self.num_colors,
                perm.len()
            )));
        }
        let colors = self.colors.iter().map(|&c| perm[c - 1]).collect();
        EdgeColoring::new(colors, self.num_colors)
    }

    pub fn check_against(&self, graph: &Graph) -> Result<()> {
        if self.colors.len() != graph.m() {
            return Err(Error::InvalidInput(format!(
                "coloring covers {} edges but the graph has {}",
                self.colors.len(),
                graph.m()
            )));
        }
        Ok(())
    }
}
