//! Distance-ℓ proper-path colorings of graphs.
//!
//! A path in an edge-colored graph is *distance ℓ-proper* when every window of
//! `ℓ + 1` consecutive edges is rainbow. A coloring is `(k, ℓ)`-proper connected
//! when every pair of distinct vertices is joined by `k` internally disjoint
//! such paths, and `pc_{k,ℓ}(G)` is the fewest colors that achieve it.
//!
//! The crate is organised as
//!
//! * [`graph`]: the immutable [`Graph`] type, family generators, joins,
//!   Cartesian products, permutation graphs and the edge-list text formats.
//! * [`structure`]: distances, connectivity, minimally 2-connected reduction,
//!   ear decompositions, Hamiltonian paths and bounded-diameter subtrees.
//! * [`verify`]: the distance-ℓ path predicate and the coloring verifier.
//! * [`exact`]: exhaustive search for `pc_{1,ℓ}(G)` on small graphs.
//! * [`construct`]: one colorer per known family or graph operation.

pub mod construct;
pub mod error;
pub mod exact;
pub mod graph;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{EdgeColoring, Family, Graph, Permutation};
pub use verify::{Certificate, WindowParam};
