use super::{ConstructionReport, Theorem};
use crate::error::{Error, Result};
use crate::graph::{generate, Color, Family, Graph, Vertex};
use crate::structure::is_connected;
use crate::verify::WindowParam;

/// `base^exp >= n`, without overflow.
fn power_at_least(base: usize, exp: usize, n: usize) -> bool {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
        if acc >= n {
            return true;
        }
    }
    acc >= n
}

/// Up to `count` distinct vectors over `1..=base` (`base` is 2 or 3): the
/// unit perturbations `(2,1,…,1), …, (1,…,1,2)` first, then the remaining
/// binary vectors, then the vectors containing a 3, each group in
/// lexicographic order.
fn distinct_vectors(len: usize, base: Color, count: usize) -> Vec<Vec<Color>> {
    let is_unit = |v: &[Color]| v.iter().filter(|&&c| c == 2).count() == 1 && v.iter().all(|&c| c <= 2);
    let mut out: Vec<Vec<Color>> = (0..len)
        .map(|i| (0..len).map(|k| if k == i { 2 } else { 1 }).collect())
        .take(count)
        .collect();
    for top in 2..=base {
        let mut v = vec![1; len];
        while out.len() < count {
            if !is_unit(&v) && (top == 2 || v.contains(&top)) {
                out.push(v.clone());
            }
            // Odometer step over 1..=top.
            let Some(k) = (0..len).rev().find(|&k| v[k] < top) else { break };
            v[k] += 1;
            v[k + 1..].iter_mut().for_each(|c| *c = 1);
        }
    }
    out
}

/// The vectors that color `K_{m,n}`: vertex `j` of the `n` side gets
/// `vectors[j]`, and its edge to `u_i` gets `vectors[j][i]`. Returns the
/// vectors, the claimed color count and the case label.
pub fn bipartite_vectors(m: usize, n: usize, ell: WindowParam) -> Result<(Vec<Vec<Color>>, usize, &'static str)> {
    if m == 0 || m > n {
        return Err(Error::InvalidParameter(format!(
            "complete bipartite coloring needs 1 <= m <= n, got m={m} n={n}"
        )));
    }
    if ell.get() < 2 {
        return Err(Error::InvalidParameter("complete bipartite coloring needs ell >= 2".into()));
    }
    if m == 1 {
        return Ok(((1..=n).map(|c| vec![c]).collect(), n, "m = 1: star, all edges distinct"));
    }
    if power_at_least(2, m, n) {
        return Ok((distinct_vectors(m, 2, n), 2, "n <= 2^m: distinct binary vectors"));
    }
    let binary = 1usize << m;
    let mut vectors = distinct_vectors(m, 2, binary);
    if ell.get() == 2 {
        vectors.resize(n, vec![3; m]);
        return Ok((vectors, 3, "ell = 2, n > 2^m: binary vectors plus all-3"));
    }
    if power_at_least(3, m, n) {
        return Ok((distinct_vectors(m, 3, n), 3, "ell >= 3, 2^m < n <= 3^m: distinct ternary vectors"));
    }
    let mut tail = vec![4; m];
    tail[0] = 3;
    vectors.resize(n, tail);
    Ok((vectors, 4, "ell >= 3, n > 3^m: binary vectors plus (3,4,...,4)"))
}

/// Colors the edges between `left` and `right` from vectors on `right`.
fn paint_bipartite(graph: &Graph, colors: &mut [Color], left: &[Vertex], right: &[Vertex], vectors: &[Vec<Color>]) {
    for (j, &v) in right.iter().enumerate() {
        for (i, &u) in left.iter().enumerate() {
            colors[graph.edge_id(u, v).unwrap()] = vectors[j][i];
        }
    }
}

/// `K_{m,n}` as built by the generator (`m` side first).
pub fn color_complete_bipartite(m: usize, n: usize, ell: WindowParam) -> Result<ConstructionReport> {
    let (vectors, claimed, case) = bipartite_vectors(m, n, ell)?;
    let graph = generate(&Family::CompleteBipartite { m, n })?;
    let mut colors = vec![1; graph.m()];
    let left: Vec<Vertex> = (0..m).collect();
    let right: Vec<Vertex> = (m..m + n).collect();
    paint_bipartite(&graph, &mut colors, &left, &right, &vectors);
    ConstructionReport::new(colors, claimed, Theorem::CompleteBipartite, case)
}

/// The smallest 1-based `i` for which the prefix/suffix split of the sorted
/// parts after position `i` has sides `a <= b` with `b <= 2^a`.
pub fn balanced_split(parts: &[usize]) -> Option<usize> {
    let total: usize = parts.iter().sum();
    let mut prefix = 0;
    for i in 1..parts.len() {
        prefix += parts[i - 1];
        let (small, large) = (prefix.min(total - prefix), prefix.max(total - prefix));
        if power_at_least(2, small, large) {
            return Some(i);
        }
    }
    None
}

/// `K_{n_1,…,n_t}` as built by the generator; `parts` must be sorted. The
/// same coloring serves every `ℓ`.
pub fn color_complete_multipartite(parts: &[usize], _ell: WindowParam) -> Result<ConstructionReport> {
    let t = parts.len();
    if t < 3 {
        return Err(Error::InvalidParameter("complete multipartite coloring needs t >= 3".into()));
    }
    if parts.contains(&0) || parts.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidParameter(
            "parts must be positive and sorted ascending".into(),
        ));
    }
    let graph = generate(&Family::CompleteMultipartite { parts: parts.to_vec() })?;
    let n = parts[t - 1];
    let m = graph.n() - n;
    let mut colors = vec![1; graph.m()];
    if n == 1 {
        return ConstructionReport::new(colors, 1, Theorem::CompleteMultipartite, "n = 1: complete graph");
    }
    let others: Vec<Vertex> = (0..m).collect();
    let last: Vec<Vertex> = (m..m + n).collect();
    if n >= m && power_at_least(2, m, n) {
        paint_bipartite(&graph, &mut colors, &others, &last, &distinct_vectors(m, 2, n));
        return ConstructionReport::new(
            colors,
            2,
            Theorem::CompleteMultipartite,
            "m <= n <= 2^m: spanning K_{m,n}",
        );
    }
    if n < m {
        let i = balanced_split(parts).ok_or_else(|| {
            Error::Invariant(format!("no balanced split exists for parts {parts:?}"))
        })?;
        let cut: usize = parts[..i].iter().sum();
        let prefix: Vec<Vertex> = (0..cut).collect();
        let suffix: Vec<Vertex> = (cut..graph.n()).collect();
        let (small, large) = if prefix.len() <= suffix.len() {
            (prefix, suffix)
        } else {
            (suffix, prefix)
        };
        let vectors = distinct_vectors(small.len(), 2, large.len());
        paint_bipartite(&graph, &mut colors, &small, &large, &vectors);
        return ConstructionReport::new(
            colors,
            2,
            Theorem::CompleteMultipartite,
            format!("2 <= n < m: balanced split after part {i}"),
        );
    }
    let mut vectors = distinct_vectors(m, 2, 1 << m);
    let mut tail = vec![2; m];
    tail[0] = 1;
    vectors.resize(n, tail);
    paint_bipartite(&graph, &mut colors, &others, &last, &vectors);
    for (id, &(u, v)) in graph.edges().iter().enumerate() {
        if u < m && v < m {
            colors[id] = 3;
        }
    }
    ConstructionReport::new(
        colors,
        3,
        Theorem::CompleteMultipartite,
        "n > 2^m: binary vectors, (1,2,...,2), color 3 inside the small parts",
    )
}

/// Stored 2-colorings of `W_4`, `W_5` and `W_6` in the generator's edge order.
/// Each is the first canonical coloring the exact search finds at `ℓ = 2`.
const WHEEL_SMALL: [&[Color]; 3] = [
    &[1, 1, 1, 1, 1, 1, 2, 2],
    &[1, 1, 1, 1, 1, 1, 2, 2, 2, 2],
    &[1, 1, 1, 1, 2, 2, 2, 1, 2, 2, 1, 1],
];

/// The stored 2-coloring of `W_n` for `4 <= n <= 6`.
pub fn wheel_small_coloring(n: usize) -> Option<&'static [Color]> {
    (4..=6).contains(&n).then(|| WHEEL_SMALL[n - 4])
}

/// `W_n` as built by the generator (rim `0..n`, center `n`).
pub fn color_wheel(n: usize, ell: WindowParam) -> Result<ConstructionReport> {
    if ell.get() < 2 {
        return Err(Error::InvalidParameter("wheel coloring needs ell >= 2".into()));
    }
    let graph = generate(&Family::Wheel { n })?;
    if n == 3 {
        return ConstructionReport::new(vec![1; graph.m()], 1, Theorem::Wheel, "W_3 = K_4");
    }
    if let Some(stored) = wheel_small_coloring(n) {
        return ConstructionReport::new(stored.to_vec(), 2, Theorem::Wheel, "stored 2-coloring");
    }
    let center = n;
    let rim = |i: usize| (i - 1) % 3 + 1;
    let mut colors = vec![0; graph.m()];
    for i in 1..=n {
        // u_i is vertex i - 1.
        colors[graph.edge_id(i - 1, i % n).unwrap()] = rim(i);
        let spoke = if i == 1 { 3 } else { 6 - rim(i) - rim(i - 1) };
        colors[graph.edge_id(i - 1, center).unwrap()] = spoke;
    }
    ConstructionReport::new(colors, 3, Theorem::Wheel, "n >= 7: rim 1,2,3 repeating")
}

/// `Q_t` as built by the generator; dimension `i` flips bit `i - 1`.
pub fn color_hypercube(t: usize, ell: WindowParam) -> Result<ConstructionReport> {
    let l = ell.get();
    if l < 2 {
        return Err(Error::InvalidParameter("hypercube coloring needs ell >= 2".into()));
    }
    let graph = generate(&Family::Hypercube { t })?;
    let colors = graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            let dim = (u ^ v).trailing_zeros() as usize + 1;
            (dim - 1) % (l + 1) + 1
        })
        .collect();
    let (claimed, case) = match t {
        1 => (1, "Q_1 = K_2"),
        2 => (2, "Q_2 = C_4"),
        _ if l >= t => (t, "ell >= t: one color per dimension"),
        _ => (l + 1, "ell < t: dimensions modulo ell + 1"),
    };
    ConstructionReport::new(colors, claimed, Theorem::Hypercube, case)
}

/// `G ∨ H` as built by [`join`](crate::graph::join): the cross edges carry a
/// complete bipartite coloring at `ℓ = 2`, all other edges color 1.
pub fn color_join(g: &Graph, h: &Graph) -> Result<ConstructionReport> {
    if g.n() < 2 || h.n() < 2 {
        return Err(Error::Precondition("join coloring needs two nontrivial factors".into()));
    }
    if !is_connected(g) || !is_connected(h) {
        return Err(Error::Precondition("join coloring needs connected factors".into()));
    }
    let joined = crate::graph::join(g, h);
    let side_g: Vec<Vertex> = (0..g.n()).collect();
    let side_h: Vec<Vertex> = (g.n()..joined.n()).collect();
    let (small, large) = if side_g.len() <= side_h.len() {
        (side_g, side_h)
    } else {
        (side_h, side_g)
    };
    let ell = WindowParam::new(2)?;
    let (vectors, claimed, case) = bipartite_vectors(small.len(), large.len(), ell)?;
    let mut colors = vec![1; joined.m()];
    paint_bipartite(&joined, &mut colors, &small, &large, &vectors);
    ConstructionReport::new(colors, claimed, Theorem::Join, format!("spanning K_{{m,n}}, {case}"))
}
