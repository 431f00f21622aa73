use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// A named graph family with its parameters.
///
/// Labelings are fixed so that colorings are reproducible:
///
/// * `Path`/`Cycle`: vertices in path/cycle order.
/// * `Star { n }`: `K_{1,n}` with center 0.
/// * `Wheel { n }`: rim `0..n` in cyclic order, center `n`.
/// * `CompleteBipartite { m, n }`: the `m` side is `0..m`, the `n` side follows.
/// * `CompleteMultipartite`: parts laid out consecutively in the given order.
/// * `Hypercube { t }`: vertex index is the binary tuple value; dimension `i`
///   (1-based) flips bit `i - 1`.
/// * `DoubleStar { a, b }`: adjacent centers 0 and 1 of degrees `a` and `b`,
///   leaves of 0 first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    Wheel { n: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    CompleteMultipartite { parts: Vec<usize> },
    Hypercube { t: usize },
    DoubleStar { a: usize, b: usize },
    RandomTree { n: usize, seed: u64 },
    /// Hamiltonian cycle plus random chords up to `m` edges in total.
    Random2Connected { n: usize, m: usize, seed: u64 },
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what.to_string()))
    }
}

/// Builds the standard graph of a family.
pub fn generate(spec: &Family) -> Result<Graph> {
    match *spec {
        Family::Path { n } => {
            require(n >= 1, "path needs n >= 1")?;
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle { n } => {
            require(n >= 3, "cycle needs n >= 3")?;
            Graph::new(n, cycle_edges(n))
        }
        Family::Star { n } => {
            require(n >= 1, "star needs n >= 1 leaves")?;
            Graph::new(n + 1, (1..=n).map(|i| (0, i)))
        }
        Family::Wheel { n } => {
            require(n >= 3, "wheel needs n >= 3")?;
            let mut edges = cycle_edges(n);
            edges.extend((0..n).map(|i| (i, n)));
            edges.sort_unstable();
            Graph::new(n + 1, edges)
        }
        Family::Complete { n } => {
            require(n >= 1, "complete graph needs n >= 1")?;
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::CompleteBipartite { m, n } => {
            require(m >= 1 && n >= 1, "complete bipartite needs m >= 1 and n >= 1")?;
            Graph::new(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
        }
        Family::CompleteMultipartite { ref parts } => {
            require(parts.len() >= 2, "complete multipartite needs at least two parts")?;
            require(parts.iter().all(|&p| p >= 1), "every part needs at least one vertex")?;
            let mut part_of = Vec::new();
            for (i, &p) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(i, p));
            }
            let total = part_of.len();
            let edges = (0..total)
                .flat_map(|u| (u + 1..total).map(move |v| (u, v)))
                .filter(|&(u, v)| part_of[u] != part_of[v])
                .collect::<Vec<_>>();
            Graph::new(total, edges)
        }
        Family::Hypercube { t } => {
            require(t >= 1, "hypercube needs t >= 1")?;
            require(t <= 20, "hypercube dimension above 20 is not supported")?;
            let n = 1usize << t;
            let edges = (0..n)
                .flat_map(|x| (0..t).map(move |i| (x, x ^ (1 << i))))
                .filter(|&(x, y)| x < y)
                .collect::<Vec<_>>();
            let mut edges = edges;
            edges.sort_unstable();
            Graph::new(n, edges)
        }
        Family::DoubleStar { a, b } => {
            require(a >= 1 && b >= 1, "double star needs a >= 1 and b >= 1")?;
            let mut edges = vec![(0, 1)];
            let mut next = 2;
            for _ in 1..a {
                edges.push((0, next));
                next += 1;
            }
            for _ in 1..b {
                edges.push((1, next));
                next += 1;
            }
            Graph::new(next, edges)
        }
        Family::RandomTree { n, seed } => {
            require(n >= 1, "random tree needs n >= 1")?;
            Graph::new(n, random_tree_edges(n, &mut ChaCha8Rng::seed_from_u64(seed)))
        }
        Family::Random2Connected { n, m, seed } => {
            require(n >= 3, "random 2-connected graph needs n >= 3")?;
            require(
                m >= n && m <= n * (n - 1) / 2,
                "random 2-connected graph needs n <= m <= n(n-1)/2",
            )?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            let mut edges: Vec<(usize, usize)> = (0..n)
                .map(|i| {
                    let (u, v) = (order[i], order[(i + 1) % n]);
                    (u.min(v), u.max(v))
                })
                .collect();
            let mut chords: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|e| !edges.contains(e))
                .collect();
            chords.shuffle(&mut rng);
            edges.extend(chords.into_iter().take(m - n));
            edges.sort_unstable();
            Graph::new(n, edges)
        }
    }
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    edges.sort_unstable();
    edges
}

/// Uniform random labelled tree via a Prüfer sequence.
fn random_tree_edges(n: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    if n == 1 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    code.iter().for_each(|&v| degree[v] += 1);
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &code {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf.min(v), leaf.max(v)));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges.sort_unstable();
    edges
}
