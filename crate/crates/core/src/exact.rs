//! Exhaustive computation of `pc_{1,ℓ}(G)` on small graphs.
//!
//! Colorings are enumerated in canonical form: the first occurrence of color
//! `c + 1` (in edge order) comes after the first occurrence of color `c`. Each
//! canonical coloring stands for the `t!` colorings obtained by permuting its
//! colors, and verification is invariant under such permutations.
//!
//! Levels `t = 1, 2, …` are searched in order; level `t` enumerates colorings
//! that use exactly `t` colors. Work is split by fixing the colors of the first
//! few edges; the parallel split never changes which witness is returned.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, Graph, Vertex};
use crate::structure::is_connected;
use crate::verify::{PathFinder, WindowParam};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    /// Highest color count tried by [`min_colors_exact`].
    pub max_colors: usize,
    pub time_limit: Option<Duration>,
    /// Graphs with more edges are not searched at all.
    pub max_edges: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_colors: 8,
            time_limit: Some(Duration::from_secs(60)),
            max_edges: 24,
        }
    }
}

impl SearchBudget {
    pub fn with_max_colors(mut self, max_colors: usize) -> Self {
        self.max_colors = max_colors;
        self
    }

    pub fn with_time_limit(mut self, limit: Option<Duration>) -> Self {
        self.time_limit = limit;
        self
    }

    pub fn with_max_edges(mut self, max_edges: usize) -> Self {
        self.max_edges = max_edges;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.max_colors == 0 || self.max_edges == 0 || self.time_limit == Some(Duration::ZERO) {
            return Err(Error::InvalidParameter("search budget values must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub min_colors: usize,
    /// Canonical witness using exactly `min_colors` colors.
    pub witness: EdgeColoring,
    pub colorings_examined: u64,
    /// Levels proven to admit no valid coloring (all of `1..min_colors`).
    pub exhausted: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetLimit {
    Time,
    Colors,
    Edges,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactOutcome {
    Found(ExactResult),
    /// The budget ran out; `exhausted` lists the levels fully refuted before
    /// that. This is never a bound on its own beyond those levels.
    Inconclusive {
        exhausted: Vec<usize>,
        colorings_examined: u64,
        limit: BudgetLimit,
    },
}

impl ExactOutcome {
    pub fn min_colors(&self) -> Option<usize> {
        match self {
            ExactOutcome::Found(r) => Some(r.min_colors),
            ExactOutcome::Inconclusive { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundOutcome {
    /// No valid coloring with at most `t` colors exists.
    Proven,
    /// A valid coloring with at most `t` colors.
    Refuted(EdgeColoring),
    Inconclusive,
}

impl BoundOutcome {
    pub fn is_proven(&self) -> bool {
        matches!(self, BoundOutcome::Proven)
    }
}

/// `pc_{1,ℓ}(G)` by ascending exhaustive search.
pub fn min_colors_exact(graph: &Graph, ell: WindowParam, budget: &SearchBudget) -> Result<ExactOutcome> {
    check_input(graph)?;
    budget.validate()?;
    let examined = AtomicU64::new(0);
    let mut exhausted = Vec::new();
    let inconclusive = |exhausted: Vec<usize>, limit| {
        Ok(ExactOutcome::Inconclusive {
            exhausted,
            colorings_examined: examined.load(Ordering::Relaxed),
            limit,
        })
    };
    if graph.m() > budget.max_edges {
        return inconclusive(exhausted, BudgetLimit::Edges);
    }
    let deadline = budget.time_limit.map(|d| Instant::now() + d);
    // A rainbow coloring always works, so the answer is at most m.
    for t in 1..=graph.m() {
        if t > budget.max_colors {
            return inconclusive(exhausted, BudgetLimit::Colors);
        }
        match search_level(graph, ell, t, deadline, &examined) {
            Level::Found(colors) => {
                return Ok(ExactOutcome::Found(ExactResult {
                    min_colors: t,
                    witness: EdgeColoring::new(colors, t)?,
                    colorings_examined: examined.load(Ordering::Relaxed),
                    exhausted,
                }))
            }
            Level::Exhausted => exhausted.push(t),
            Level::TimedOut => return inconclusive(exhausted, BudgetLimit::Time),
        }
    }
    Err(Error::Invariant("rainbow coloring failed to verify on a connected graph".into()))
}

/// Decides whether every coloring with at most `t` colors fails.
pub fn prove_lower_bound(graph: &Graph, ell: WindowParam, t: usize, budget: &SearchBudget) -> Result<BoundOutcome> {
    check_input(graph)?;
    budget.validate()?;
    if graph.m() > budget.max_edges {
        return Ok(BoundOutcome::Inconclusive);
    }
    let deadline = budget.time_limit.map(|d| Instant::now() + d);
    let examined = AtomicU64::new(0);
    for s in 1..=t.min(graph.m()) {
        match search_level(graph, ell, s, deadline, &examined) {
            Level::Found(colors) => return Ok(BoundOutcome::Refuted(EdgeColoring::new(colors, s)?)),
            Level::Exhausted => {}
            Level::TimedOut => return Ok(BoundOutcome::Inconclusive),
        }
    }
    Ok(BoundOutcome::Proven)
}

fn check_input(graph: &Graph) -> Result<()> {
    if graph.m() == 0 {
        return Err(Error::Precondition("exact search needs at least one edge".into()));
    }
    if !is_connected(graph) {
        return Err(Error::Precondition("exact search needs a connected graph".into()));
    }
    Ok(())
}

enum Level {
    Found(Vec<Color>),
    Exhausted,
    TimedOut,
}

fn search_level(
    graph: &Graph,
    ell: WindowParam,
    t: usize,
    deadline: Option<Instant>,
    examined: &AtomicU64,
) -> Level {
    let m = graph.m();
    let pairs: Vec<(Vertex, Vertex)> = (0..graph.n())
        .flat_map(|u| (u + 1..graph.n()).map(move |v| (u, v)))
        .filter(|&(u, v)| !graph.has_edge(u, v))
        .collect();
    if pairs.is_empty() {
        // Complete graph: any coloring works, the smallest is monochromatic.
        examined.fetch_add(1, Ordering::Relaxed);
        return Level::Found(vec![1; m]);
    }
    let target = rayon::current_num_threads() * 8;
    let mut depth = 0;
    while depth < m && canonical_count(depth, t, m) < target as u64 {
        depth += 1;
    }
    let mut prefixes = Vec::new();
    canonical_for_each(depth, t, Some(m), &[], &mut |p| {
        prefixes.push(p.to_vec());
        true
    });
    let stop = AtomicBool::new(false);
    let timed_out = AtomicBool::new(false);
    let found = prefixes.par_iter().find_map_first(|prefix| {
        let mut worker = Worker {
            finder: PathFinder::new(graph, ell),
            pairs: pairs.clone(),
            examined: 0,
        };
        let mut witness = None;
        canonical_for_each(m, t, Some(m), prefix, &mut |colors| {
            worker.examined += 1;
            if worker.examined.is_multiple_of(256) {
                if stop.load(Ordering::Relaxed) {
                    return false;
                }
                if deadline.is_some_and(|d| Instant::now() >= d) {
                    timed_out.store(true, Ordering::Relaxed);
                    stop.store(true, Ordering::Relaxed);
                    return false;
                }
            }
            if worker.accepts(colors) {
                witness = Some(colors.to_vec());
                return false;
            }
            true
        });
        examined.fetch_add(worker.examined, Ordering::Relaxed);
        witness
    });
    // Any witness settles the level: lower levels are already exhausted. Only
    // when the deadline interrupted an earlier prefix can it differ from the
    // first witness in canonical order.
    match found {
        Some(colors) => Level::Found(colors),
        None if timed_out.load(Ordering::Relaxed) => Level::TimedOut,
        None => Level::Exhausted,
    }
}

struct Worker<'g> {
    finder: PathFinder<'g>,
    /// Non-adjacent pairs; the most recent failure is moved to the front.
    pairs: Vec<(Vertex, Vertex)>,
    examined: u64,
}

impl Worker<'_> {
    fn accepts(&mut self, colors: &[Color]) -> bool {
        for i in 0..self.pairs.len() {
            let (u, v) = self.pairs[i];
            if !self.finder.exists(colors, u, v) {
                if i > 0 {
                    self.pairs[..=i].rotate_right(1);
                }
                return false;
            }
        }
        true
    }
}

/// Number of canonical `len`-prefixes over `1..=t` that can be completed to
/// `total` positions using all `t` colors.
fn canonical_count(len: usize, t: usize, total: usize) -> u64 {
    let mut count = 0;
    canonical_for_each(len, t, Some(total), &[], &mut |_| {
        count += 1;
        true
    });
    count
}

/// Visits canonical colorings of `len` edges that extend `prefix`, use colors
/// from `1..=t` and, when `exact_total` is given, can use all `t` colors
/// within that many positions. The visitor returns `false` to stop.
fn canonical_for_each(
    len: usize,
    t: usize,
    exact_total: Option<usize>,
    prefix: &[Color],
    visit: &mut dyn FnMut(&[Color]) -> bool,
) {
    let total = exact_total.unwrap_or(len);
    let exact_t = if exact_total.is_some() { t } else { 0 };
    let mut buf = prefix.to_vec();
    let used = prefix.iter().copied().max().unwrap_or(0);
    fn rec(
        buf: &mut Vec<Color>,
        used: usize,
        len: usize,
        t: usize,
        exact_t: usize,
        total: usize,
        visit: &mut dyn FnMut(&[Color]) -> bool,
    ) -> bool {
        if used + (total - buf.len()) < exact_t {
            return true;
        }
        if buf.len() == len {
            return visit(buf);
        }
        for c in 1..=(used + 1).min(t) {
            buf.push(c);
            let go_on = rec(buf, used.max(c), len, t, exact_t, total, visit);
            buf.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(&mut buf, used, len, t, exact_t, total, visit);
}

/// Number of canonical colorings of `m` edges using at most `t` colors.
pub fn canonical_colorings_at_most(m: usize, t: usize) -> u64 {
    let mut count = 0;
    canonical_for_each(m, t, None, &[], &mut |_| {
        count += 1;
        true
    });
    count
}

/// Number of canonical colorings of `m` edges using exactly `t` colors.
pub fn canonical_colorings_exactly(m: usize, t: usize) -> u64 {
    let mut count = 0;
    canonical_for_each(m, t, Some(m), &[], &mut |c| {
        if c.iter().copied().max() == Some(t) {
            count += 1;
        }
        true
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::verify::verify_coloring;

    fn ell(l: usize) -> WindowParam {
        WindowParam::new(l).unwrap()
    }

    fn gen(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    fn exact(g: &Graph, l: usize) -> ExactResult {
        match min_colors_exact(g, ell(l), &SearchBudget::default()).unwrap() {
            ExactOutcome::Found(r) => r,
            other => panic!("inconclusive: {other:?}"),
        }
    }

    /// Direct enumeration oracle: all t^m colorings, keeping those whose
    /// colors first appear in increasing order.
    fn brute_canonical(m: usize, t: usize) -> u64 {
        let mut count = 0;
        let total = (t as u64).pow(m as u32);
        for code in 0..total {
            let mut x = code;
            let mut next = 1;
            let mut ok = true;
            for _ in 0..m {
                let c = (x % t as u64) as usize + 1;
                x /= t as u64;
                if c > next {
                    ok = false;
                    break;
                }
                if c == next {
                    next += 1;
                }
            }
            count += ok as u64;
        }
        count
    }

    fn stirling2(n: usize, k: usize) -> u64 {
        let mut s = vec![vec![0u64; k + 1]; n + 1];
        s[0][0] = 1;
        for i in 1..=n {
            for j in 1..=k.min(i) {
                s[i][j] = j as u64 * s[i - 1][j] + s[i - 1][j - 1];
            }
        }
        s[n][k]
    }

    #[test]
    fn canonical_counts_match_oracles() {
        for m in 1..=6 {
            for t in 1..=4 {
                let expected: u64 = (1..=t).map(|j| stirling2(m, j)).sum();
                assert_eq!(canonical_colorings_at_most(m, t), expected, "m={m} t={t}");
                assert_eq!(brute_canonical(m, t), expected, "m={m} t={t}");
                assert_eq!(canonical_colorings_exactly(m, t), stirling2(m, t));
            }
        }
        assert_eq!(canonical_colorings_at_most(11, 2), 1 << 10);
    }

    #[test]
    fn exact_examples() {
        let r = exact(&gen(Family::Complete { n: 3 }), 2);
        assert_eq!(r.min_colors, 1);
        let r = exact(&gen(Family::Path { n: 4 }), 2);
        assert_eq!(r.min_colors, 3);
        assert_eq!(r.exhausted, vec![1, 2]);
        let c4 = gen(Family::Cycle { n: 4 });
        let r = exact(&c4, 2);
        assert_eq!(r.min_colors, 2);
        assert_eq!(r.witness.distinct_colors(), 2);
        assert!(verify_coloring(&c4, &r.witness, ell(2), 1).unwrap().is_ok());
    }

    #[test]
    fn lower_bound_examples() {
        let budget = SearchBudget::default();
        let w7 = gen(Family::Wheel { n: 7 });
        assert!(prove_lower_bound(&w7, ell(2), 2, &budget).unwrap().is_proven());
        let k25 = gen(Family::CompleteBipartite { m: 2, n: 5 });
        assert!(prove_lower_bound(&k25, ell(2), 2, &budget).unwrap().is_proven());
        let k4 = gen(Family::Complete { n: 4 });
        assert!(matches!(
            prove_lower_bound(&k4, ell(2), 1, &budget).unwrap(),
            BoundOutcome::Refuted(_)
        ));
    }

    #[test]
    fn witness_is_first_in_canonical_order() {
        // Sequential reference: the first canonical coloring that verifies.
        let g = gen(Family::Cycle { n: 6 });
        let r = exact(&g, 2);
        let mut first = None;
        canonical_for_each(g.m(), r.min_colors, Some(g.m()), &[], &mut |c| {
            let col = EdgeColoring::new(c.to_vec(), r.min_colors).unwrap();
            if verify_coloring(&g, &col, ell(2), 1).unwrap().is_ok() {
                first = Some(c.to_vec());
                return false;
            }
            true
        });
        assert_eq!(Some(r.witness.colors().to_vec()), first);
    }

    #[test]
    fn budget_limits_are_inconclusive() {
        let p = gen(Family::Path { n: 6 });
        let out = min_colors_exact(&p, ell(2), &SearchBudget::default().with_max_colors(2)).unwrap();
        assert_eq!(
            out,
            ExactOutcome::Inconclusive {
                exhausted: vec![1, 2],
                colorings_examined: out_examined(&out),
                limit: BudgetLimit::Colors
            }
        );
        let out = min_colors_exact(&p, ell(2), &SearchBudget::default().with_max_edges(3)).unwrap();
        assert!(matches!(out, ExactOutcome::Inconclusive { limit: BudgetLimit::Edges, .. }));
        let k = gen(Family::CompleteBipartite { m: 3, n: 7 });
        let out = prove_lower_bound(
            &k,
            ell(3),
            3,
            &SearchBudget::default().with_time_limit(Some(Duration::from_millis(20))),
        )
        .unwrap();
        assert_eq!(out, BoundOutcome::Inconclusive);
    }

    fn out_examined(out: &ExactOutcome) -> u64 {
        match out {
            ExactOutcome::Inconclusive { colorings_examined, .. } => *colorings_examined,
            ExactOutcome::Found(r) => r.colorings_examined,
        }
    }

    #[test]
    fn precondition_errors() {
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            min_colors_exact(&split, ell(1), &SearchBudget::default()),
            Err(Error::Precondition(_))
        ));
        let single = Graph::new(1, []).unwrap();
        assert!(prove_lower_bound(&single, ell(1), 1, &SearchBudget::default()).is_err());
    }
}
