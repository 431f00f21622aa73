//! Colorers for the graph classes with a known `pc_{1,ℓ}` value or bound.
//!
//! Every colorer returns a [`ConstructionReport`]. The coloring always refers
//! to a specific graph: the input graph, the graph built by
//! [`generate`](crate::graph::generate) for the family parameters, or the
//! result of [`join`](crate::graph::join),
//! [`cartesian_product`](crate::graph::cartesian_product) or
//! [`permutation_graph`](crate::graph::permutation_graph) for the operation
//! colorers.

mod cartesian;
mod families;
mod permutation;
mod template;
mod tree;
mod two_connected;

pub use cartesian::color_cartesian;
pub use families::{
    balanced_split, bipartite_vectors, color_complete_bipartite, color_complete_multipartite,
    color_hypercube, color_join, color_wheel, wheel_small_coloring,
};
pub use permutation::color_permutation_graph;
pub use tree::color_tree;
pub use two_connected::{color_2connected, color_2connected_traced, AnchorSet, EarStep};

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, Graph, Vertex};
use crate::structure::is_hamiltonian_path;
use crate::verify::{verify_coloring, WindowParam};

/// Which result a construction realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    Traceable,
    Tree,
    CompleteBipartite,
    CompleteMultipartite,
    Wheel,
    Hypercube,
    TwoConnected,
    Join,
    Cartesian,
    PermutationGraph,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::Traceable => "traceable",
            Theorem::Tree => "tree",
            Theorem::CompleteBipartite => "bipartite",
            Theorem::CompleteMultipartite => "multipartite",
            Theorem::Wheel => "wheel",
            Theorem::Hypercube => "cube",
            Theorem::TwoConnected => "2connected",
            Theorem::Join => "join",
            Theorem::Cartesian => "cartesian",
            Theorem::PermutationGraph => "permutation",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub coloring: EdgeColoring,
    /// The value (or upper bound) the theorem gives for this input.
    pub claimed_colors: usize,
    pub theorem: Theorem,
    /// Which case fired, in a short human-readable form.
    pub notes: String,
}

impl ConstructionReport {
    fn new(colors: Vec<Color>, claimed: usize, theorem: Theorem, notes: impl Into<String>) -> Result<Self> {
        let coloring = EdgeColoring::from_colors(colors)?;
        if coloring.num_colors() > claimed.max(1) {
            return Err(Error::Invariant(format!(
                "{theorem} construction used color {} but claims {claimed}",
                coloring.num_colors()
            )));
        }
        Ok(ConstructionReport {
            coloring,
            claimed_colors: claimed,
            theorem,
            notes: notes.into(),
        })
    }
}

/// Colors a Hamiltonian path cyclically with `1, 2, …, ℓ+1` and every other
/// edge with 1.
pub fn color_traceable(graph: &Graph, ham_path: &[Vertex], ell: WindowParam) -> Result<ConstructionReport> {
    if !is_hamiltonian_path(graph, ham_path) {
        return Err(Error::Precondition(format!(
            "{ham_path:?} is not a Hamiltonian path of the graph"
        )));
    }
    let period = ell.get() + 1;
    let mut colors = vec![1; graph.m()];
    for (i, w) in ham_path.windows(2).enumerate() {
        colors[graph.edge_id(w[0], w[1]).unwrap()] = i % period + 1;
    }
    ConstructionReport::new(colors, period, Theorem::Traceable, "cyclic along the Hamiltonian path")
}

/// Runs the verifier and turns a failure into an invariant error.
fn ensure_verified(graph: &Graph, report: &ConstructionReport, ell: WindowParam) -> Result<()> {
    let cert = verify_coloring(graph, &report.coloring, ell, 1)?;
    match cert.failing_pair {
        None => Ok(()),
        Some((u, v)) => Err(Error::Invariant(format!(
            "{} construction ({}) leaves no distance-{} proper path between {u} and {v}",
            report.theorem,
            report.notes,
            ell.get()
        ))),
    }
}
