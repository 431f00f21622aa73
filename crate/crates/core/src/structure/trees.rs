use std::collections::VecDeque;

use super::{distances, is_connected};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};

pub fn is_tree(graph: &Graph) -> bool {
    graph.m() + 1 == graph.n() && is_connected(graph)
}

/// A BFS spanning tree with parents pointing toward `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    pub root: Vertex,
    pub parent: Vec<Option<Vertex>>,
    pub depth: Vec<usize>,
    /// Vertices in BFS order, root first.
    pub order: Vec<Vertex>,
}

impl RootedTree {
    /// BFS tree of a connected graph, neighbours visited in ascending order.
    pub fn bfs(graph: &Graph, root: Vertex) -> Result<Self> {
        let n = graph.n();
        let mut parent = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        depth[root] = 0;
        let mut order = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in graph.neighbors(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = Some(u);
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        if order.len() != n {
            return Err(Error::Precondition("spanning tree needs a connected graph".into()));
        }
        Ok(RootedTree {
            root,
            parent,
            depth,
            order,
        })
    }

    /// Re-roots a tree graph at `root`.
    pub fn of_tree(tree: &Graph, root: Vertex) -> Result<Self> {
        if !is_tree(tree) {
            return Err(Error::Precondition("graph is not a tree".into()));
        }
        Self::bfs(tree, root)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn height(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    /// Tree edges as `(parent, child)` in BFS order of the child.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.order
            .iter()
            .filter_map(|&v| self.parent[v].map(|p| (p, v)))
    }

    /// The vertex sequence from the root down to `v`.
    pub fn root_path(&self, v: Vertex) -> Vec<Vertex> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    /// The tree as a graph on the same vertex set.
    pub fn to_graph(&self) -> Graph {
        Graph::new(self.len(), self.edges()).expect("tree edges form a simple graph")
    }
}

/// Where a bounded-diameter ball is centered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubtreeCenter {
    Vertex(Vertex),
    Edge(Vertex, Vertex),
}

/// A subtree given by its vertex set and the ids of its edges in the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subtree {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    pub center: SubtreeCenter,
}

impl Subtree {
    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

/// The largest subtree (by edge count) of `tree` with diameter at most `d`.
///
/// Every such subtree sits inside a ball around a vertex (even `d`, radius
/// `d/2`) or around an edge (odd `d`, radius `(d-1)/2` from either endpoint),
/// so it suffices to take the largest ball. Ties go to the smallest vertex or
/// edge center.
pub fn max_subtree_size_with_diameter(tree: &Graph, d: usize) -> Result<Subtree> {
    if !is_tree(tree) {
        return Err(Error::Precondition("graph is not a tree".into()));
    }
    if d == 0 {
        return Err(Error::InvalidParameter("diameter bound must be at least 1".into()));
    }
    let dist: Vec<Vec<usize>> = (0..tree.n())
        .map(|v| distances(tree, v).into_iter().map(Option::unwrap).collect())
        .collect();
    let ball = |inside: &dyn Fn(Vertex) -> bool, center: SubtreeCenter| {
        let vertices: Vec<Vertex> = (0..tree.n()).filter(|&x| inside(x)).collect();
        let edges = (0..tree.m())
            .filter(|&id| {
                let (a, b) = tree.edge(id);
                inside(a) && inside(b)
            })
            .collect();
        Subtree {
            vertices,
            edges,
            center,
        }
    };
    let mut best: Option<Subtree> = None;
    let mut consider = |candidate: Subtree| {
        if best.as_ref().is_none_or(|b| candidate.size() > b.size()) {
            best = Some(candidate);
        }
    };
    if d.is_multiple_of(2) || tree.m() == 0 {
        let r = d / 2;
        for (c, from_c) in dist.iter().enumerate() {
            consider(ball(&|x| from_c[x] <= r, SubtreeCenter::Vertex(c)));
        }
    } else {
        let r = (d - 1) / 2;
        let mut order: Vec<EdgeId> = (0..tree.m()).collect();
        order.sort_by_key(|&id| tree.edge(id));
        for id in order {
            let (a, b) = tree.edge(id);
            consider(ball(
                &|x| dist[a][x].min(dist[b][x]) <= r,
                SubtreeCenter::Edge(a, b),
            ));
        }
    }
    Ok(best.expect("a tree has at least one vertex"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::structure::diameter;

    fn gen(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    #[test]
    fn subtree_examples() {
        let s = max_subtree_size_with_diameter(&gen(Family::Path { n: 10 }), 3).unwrap();
        assert_eq!(s.size(), 3);
        let s = max_subtree_size_with_diameter(&gen(Family::Star { n: 5 }), 2).unwrap();
        assert_eq!(s.size(), 5);
        let ds = gen(Family::DoubleStar { a: 3, b: 3 });
        let s = max_subtree_size_with_diameter(&ds, 3).unwrap();
        assert_eq!(s.size(), 5);
        assert_eq!(s.center, SubtreeCenter::Edge(0, 1));
        let s = max_subtree_size_with_diameter(&ds, 2).unwrap();
        assert_eq!(s.size(), 3);
    }

    #[test]
    fn witness_is_a_subtree_with_bounded_diameter() {
        for seed in 0..25 {
            let t = gen(Family::RandomTree { n: 11, seed });
            for d in 1..6 {
                let s = max_subtree_size_with_diameter(&t, d).unwrap();
                assert_eq!(s.vertices.len(), s.size() + 1);
                let sub = Graph::new(
                    t.n(),
                    s.edges.iter().map(|&id| t.edge(id)),
                )
                .unwrap();
                // Restrict to the witness's vertices.
                let idx = |v: usize| s.vertices.iter().position(|&x| x == v).unwrap();
                let compact = Graph::new(
                    s.vertices.len(),
                    sub.edges().iter().map(|&(a, b)| (idx(a), idx(b))),
                )
                .unwrap();
                assert!(is_tree(&compact));
                assert!(diameter(&compact).unwrap() <= d);
            }
        }
    }

    #[test]
    fn rejects_non_trees() {
        let c = gen(Family::Cycle { n: 4 });
        assert!(matches!(
            max_subtree_size_with_diameter(&c, 2),
            Err(Error::Precondition(_))
        ));
        assert!(RootedTree::of_tree(&c, 0).is_err());
    }

    #[test]
    fn rooted_tree_paths() {
        let t = gen(Family::Path { n: 5 });
        let r = RootedTree::of_tree(&t, 2).unwrap();
        assert_eq!(r.root_path(4), vec![2, 3, 4]);
        assert_eq!(r.root_path(0), vec![2, 1, 0]);
        assert_eq!(r.height(), 2);
        assert_eq!(r.edges().count(), 4);
        assert_eq!(r.to_graph().m(), 4);
    }
}
