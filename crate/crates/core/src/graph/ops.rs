use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// A permutation of `[n]`, supplied 1-indexed and stored 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// `images[i - 1] = α(i)` with values in `1..=n`.
    pub fn from_one_indexed(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &a in images {
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidParameter(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[a - 1] = true;
            image.push(a - 1);
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// 0-indexed image of a 0-indexed point.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &a) in self.image.iter().enumerate() {
            inv[a] = i;
        }
        Permutation { image: inv }
    }

    pub fn to_one_indexed(&self) -> Vec<usize> {
        self.image.iter().map(|&a| a + 1).collect()
    }
}

/// `G ∨ H`: disjoint union plus every edge between the two sides. `H`'s
/// vertices are shifted by `n_G`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n();
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    edges.extend((0..g.n()).flat_map(|u| (0..h.n()).map(move |v| (u, v + shift))));
    Graph::new(g.n() + h.n(), edges).expect("join of valid graphs is valid")
}

/// `G □ H` with vertex `(u, v)` at index `u · n_H + v`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let mut edges = Vec::with_capacity(g.n() * h.m() + h.n() * g.m());
    for u in 0..g.n() {
        for &(a, b) in h.edges() {
            edges.push((u * nh + a, u * nh + b));
        }
    }
    for &(a, b) in g.edges() {
        for v in 0..nh {
            edges.push((a * nh + v, b * nh + v));
        }
    }
    edges.sort_unstable();
    Graph::new(g.n() * nh, edges).expect("product of valid graphs is valid")
}

/// `P_α(G)`: `G`, a copy `G'` (vertex `u_i` at index `n + i - 1`), and the
/// matching `v_i u_{α(i)}`.
pub fn permutation_graph(g: &Graph, alpha: &Permutation) -> Result<Graph> {
    let n = g.n();
    if alpha.len() != n {
        return Err(Error::InvalidParameter(format!(
            "permutation has length {} but the graph has {n} vertices",
            alpha.len()
        )));
    }
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    edges.extend(g.edges().iter().map(|&(u, v)| (u + n, v + n)));
    edges.extend((0..n).map(|i| (i, n + alpha.apply(i))));
    Graph::new(2 * n, edges)
}
