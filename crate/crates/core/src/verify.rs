//! Distance-ℓ proper paths and the `(k, ℓ)`-proper-connection verifier.
//!
//! Two equally colored edges at positions `i < j` of a path are forbidden
//! exactly when `j - i <= ℓ`, i.e. every window of `ℓ + 1` consecutive edges
//! is rainbow. `ℓ = 1` is ordinary proper-path coloring.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, Graph, Vertex};

/// The window parameter `ℓ >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WindowParam(usize);

impl WindowParam {
    pub fn new(ell: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidParameter("ell must be at least 1".into()));
        }
        Ok(WindowParam(ell))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// Checks a color sequence: equal colors must be more than `ell` positions apart.
pub fn colors_are_distance_proper(colors: &[Color], ell: WindowParam) -> bool {
    let ell = ell.get();
    colors
        .iter()
        .enumerate()
        .all(|(j, c)| colors[j.saturating_sub(ell)..j].iter().all(|d| d != c))
}

/// Whether the vertex sequence `path` is a distance-ℓ proper path.
///
/// Fails with [`Error::InvalidInput`] when `path` is not a simple path of
/// `graph`.
pub fn is_distance_proper_path(
    graph: &Graph,
    coloring: &EdgeColoring,
    path: &[Vertex],
    ell: WindowParam,
) -> Result<bool> {
    coloring.check_against(graph)?;
    let mut seen = vec![false; graph.n()];
    for &v in path {
        if v >= graph.n() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidInput(format!("{path:?} is not a simple path")));
        }
    }
    let ids = graph
        .path_edges(path)
        .ok_or_else(|| Error::InvalidInput(format!("{path:?} uses a non-edge")))?;
    let colors: Vec<Color> = ids.into_iter().map(|id| coloring.color(id)).collect();
    Ok(colors_are_distance_proper(&colors, ell))
}

/// Result of one bounded path search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(Vec<Vertex>),
    Absent,
    TimedOut,
}

/// Reusable exhaustive DFS over simple paths, carrying the last `ℓ` edge
/// colors as window state. Searches run with a growing cap on path length
/// (pruned by BFS distance to the target), so short witnesses are found
/// first; a pass that never hits the cap is exhaustive. Neighbours are tried
/// in ascending order, so the first witness is deterministic.
#[derive(Debug, Clone)]
pub struct PathFinder<'g> {
    graph: &'g Graph,
    ell: usize,
    visited: Vec<bool>,
    path: Vec<Vertex>,
    window: Vec<Color>,
    /// BFS distance to the current target.
    dist: Vec<usize>,
    queue: Vec<Vertex>,
    /// Longest path (in edges) the current pass may build.
    cap: usize,
    capped: bool,
    deadline: Option<Instant>,
    steps: u64,
    timed_out: bool,
}

impl<'g> PathFinder<'g> {
    pub fn new(graph: &'g Graph, ell: WindowParam) -> Self {
        PathFinder {
            graph,
            ell: ell.get(),
            visited: vec![false; graph.n()],
            path: Vec::with_capacity(graph.n()),
            window: Vec::with_capacity(graph.n()),
            dist: vec![usize::MAX; graph.n()],
            queue: Vec::with_capacity(graph.n()),
            cap: usize::MAX,
            capped: false,
            deadline: None,
            steps: 0,
            timed_out: false,
        }
    }

    /// Searches give up (as [`Search::TimedOut`]) once `deadline` passes.
    pub fn set_deadline(&mut self, deadline: Option<Instant>) {
        self.deadline = deadline;
    }

    /// First distance-ℓ proper `u`–`v` path under `colors` (indexed by edge id).
    pub fn search(&mut self, colors: &[Color], u: Vertex, v: Vertex) -> Search {
        self.timed_out = false;
        self.steps = 0;
        self.path.clear();
        self.window.clear();
        self.distances_to(v);
        self.visited[u] = true;
        self.path.push(u);
        let mut cap = self.dist[u].max(1);
        let found = loop {
            self.cap = cap;
            self.capped = false;
            if self.dfs(colors, u, v) {
                break true;
            }
            if !self.capped || self.timed_out {
                break false;
            }
            cap *= 2;
        };
        self.visited[u] = false;
        if found {
            let path = std::mem::take(&mut self.path);
            for &x in &path {
                self.visited[x] = false;
            }
            Search::Found(path)
        } else if self.timed_out {
            Search::TimedOut
        } else {
            Search::Absent
        }
    }

    /// Existence-only variant of [`PathFinder::search`] without a deadline.
    pub fn exists(&mut self, colors: &[Color], u: Vertex, v: Vertex) -> bool {
        matches!(self.search(colors, u, v), Search::Found(_))
    }

    fn distances_to(&mut self, target: Vertex) {
        self.dist.fill(usize::MAX);
        self.queue.clear();
        self.dist[target] = 0;
        self.queue.push(target);
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            for y in self.graph.neighbors(x) {
                if self.dist[y] == usize::MAX {
                    self.dist[y] = self.dist[x] + 1;
                    self.queue.push(y);
                }
            }
        }
    }

    fn dfs(&mut self, colors: &[Color], at: Vertex, target: Vertex) -> bool {
        if at == target {
            return true;
        }
        if let Some(deadline) = self.deadline {
            self.steps += 1;
            if self.steps.is_multiple_of(1024) && Instant::now() >= deadline {
                self.timed_out = true;
            }
            if self.timed_out {
                return false;
            }
        }
        let lo = self.window.len().saturating_sub(self.ell);
        let len = self.window.len() + 1;
        for &(w, id) in self.graph.incident(at) {
            if self.visited[w] {
                continue;
            }
            let c = colors[id];
            if self.window[lo..].contains(&c) {
                continue;
            }
            if len.saturating_add(self.dist[w]) > self.cap {
                self.capped = true;
                continue;
            }
            self.visited[w] = true;
            self.path.push(w);
            self.window.push(c);
            if self.dfs(colors, w, target) {
                return true;
            }
            self.window.pop();
            self.path.pop();
            self.visited[w] = false;
        }
        false
    }

    /// Calls `visit` with every distance-ℓ proper `u`–`v` path.
    fn for_each_path(
        &mut self,
        colors: &[Color],
        u: Vertex,
        v: Vertex,
        visit: &mut dyn FnMut(&[Vertex]),
    ) {
        self.path.clear();
        self.window.clear();
        self.visited[u] = true;
        self.path.push(u);
        self.enumerate(colors, u, v, visit);
        self.visited[u] = false;
    }

    fn enumerate(&mut self, colors: &[Color], at: Vertex, target: Vertex, visit: &mut dyn FnMut(&[Vertex])) {
        if at == target {
            visit(&self.path);
            return;
        }
        let lo = self.window.len().saturating_sub(self.ell);
        for &(w, id) in self.graph.incident(at) {
            let c = colors[id];
            if self.visited[w] || self.window[lo..].contains(&c) {
                continue;
            }
            self.visited[w] = true;
            self.path.push(w);
            self.window.push(c);
            self.enumerate(colors, w, target, visit);
            self.window.pop();
            self.path.pop();
            self.visited[w] = false;
        }
    }
}

/// A distance-ℓ proper `u`–`v` path, if one exists. Exhaustive and complete.
pub fn find_distance_proper_path(
    graph: &Graph,
    coloring: &EdgeColoring,
    u: Vertex,
    v: Vertex,
    ell: WindowParam,
) -> Result<Option<Vec<Vertex>>> {
    coloring.check_against(graph)?;
    if u >= graph.n() || v >= graph.n() || u == v {
        return Err(Error::InvalidInput(format!(
            "endpoints must be distinct vertices, got {u} and {v}"
        )));
    }
    Ok(match PathFinder::new(graph, ell).search(coloring.colors(), u, v) {
        Search::Found(p) => Some(p),
        _ => None,
    })
}

/// Witness paths for one vertex pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairWitness {
    pub pair: (Vertex, Vertex),
    pub paths: Vec<Vec<Vertex>>,
}

/// Outcome of [`verify_coloring`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub ell: WindowParam,
    pub k: usize,
    /// One entry per pair that succeeded, in lexicographic pair order.
    pub witnesses: Vec<PairWitness>,
    /// The lexicographically first pair without `k` disjoint proper paths.
    pub failing_pair: Option<(Vertex, Vertex)>,
    /// Pairs whose search ran out of time without a verdict.
    pub timed_out: Vec<(Vertex, Vertex)>,
}

impl Certificate {
    pub fn is_ok(&self) -> bool {
        self.failing_pair.is_none() && self.timed_out.is_empty()
    }

    pub fn witness(&self, u: Vertex, v: Vertex) -> Option<&PairWitness> {
        let key = (u.min(v), u.max(v));
        self.witnesses
            .binary_search_by_key(&key, |w| w.pair)
            .ok()
            .map(|i| &self.witnesses[i])
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Wall-time budget for each vertex pair.
    pub pair_budget: Option<Duration>,
}

/// Checks that every pair of distinct vertices is joined by `k` internally
/// disjoint distance-ℓ proper paths.
pub fn verify_coloring(
    graph: &Graph,
    coloring: &EdgeColoring,
    ell: WindowParam,
    k: usize,
) -> Result<Certificate> {
    verify_coloring_with(graph, coloring, ell, k, &VerifyOptions::default())
}

pub fn verify_coloring_with(
    graph: &Graph,
    coloring: &EdgeColoring,
    ell: WindowParam,
    k: usize,
    options: &VerifyOptions,
) -> Result<Certificate> {
    coloring.check_against(graph)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = graph.n();
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let colors = coloring.colors();
    let outcomes: Vec<PairOutcome> = pairs
        .par_iter()
        .map_init(
            || PathFinder::new(graph, ell),
            |finder, &(u, v)| {
                finder.set_deadline(options.pair_budget.map(|b| Instant::now() + b));
                if k == 1 {
                    match finder.search(colors, u, v) {
                        Search::Found(p) => PairOutcome::Ok(vec![p]),
                        Search::Absent => PairOutcome::Fail,
                        Search::TimedOut => PairOutcome::TimedOut,
                    }
                } else {
                    match disjoint_paths(finder, colors, u, v, k) {
                        Some(paths) => PairOutcome::Ok(paths),
                        None => PairOutcome::Fail,
                    }
                }
            },
        )
        .collect();
    let mut cert = Certificate {
        ell,
        k,
        witnesses: Vec::new(),
        failing_pair: None,
        timed_out: Vec::new(),
    };
    for (pair, outcome) in pairs.into_iter().zip(outcomes) {
        match outcome {
            PairOutcome::Ok(paths) => cert.witnesses.push(PairWitness { pair, paths }),
            PairOutcome::Fail => {
                cert.failing_pair.get_or_insert(pair);
            }
            PairOutcome::TimedOut => cert.timed_out.push(pair),
        }
    }
    Ok(cert)
}

enum PairOutcome {
    Ok(Vec<Vec<Vertex>>),
    Fail,
    TimedOut,
}

/// Exhaustive search for `k` proper paths with pairwise disjoint interiors.
fn disjoint_paths(
    finder: &mut PathFinder<'_>,
    colors: &[Color],
    u: Vertex,
    v: Vertex,
    k: usize,
) -> Option<Vec<Vec<Vertex>>> {
    let mut all: Vec<Vec<Vertex>> = Vec::new();
    finder.for_each_path(colors, u, v, &mut |p| all.push(p.to_vec()));
    let interiors: Vec<Vec<Vertex>> = all
        .iter()
        .map(|p| {
            let mut inner = p[1..p.len() - 1].to_vec();
            inner.sort_unstable();
            inner
        })
        .collect();
    let n = finder.graph.n();
    let mut used = vec![false; n];
    let mut chosen = Vec::with_capacity(k);
    fn pick(
        start: usize,
        k: usize,
        interiors: &[Vec<Vertex>],
        used: &mut [bool],
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == k {
            return true;
        }
        for i in start..interiors.len() {
            if interiors[i].iter().any(|&x| used[x]) {
                continue;
            }
            interiors[i].iter().for_each(|&x| used[x] = true);
            chosen.push(i);
            if pick(i + 1, k, interiors, used, chosen) {
                return true;
            }
            chosen.pop();
            interiors[i].iter().for_each(|&x| used[x] = false);
        }
        false
    }
    pick(0, k, &interiors, &mut used, &mut chosen)
        .then(|| chosen.into_iter().map(|i| all[i].clone()).collect())
}
