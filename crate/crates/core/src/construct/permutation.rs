use super::{color_traceable, ensure_verified, ConstructionReport, Theorem};
use crate::error::{Error, Result};
use crate::graph::{permutation_graph, Graph, Permutation, Vertex};
use crate::structure::is_hamiltonian_path;
use crate::verify::WindowParam;

/// `P_α(G)` as built by [`permutation_graph`], for a traceable `G`.
///
/// Write `v_1 … v_n` for `ham_path` and `u_j` for the copy of `v_j`. When the
/// last path vertex is matched to an end of the copied path the whole graph
/// is traceable. Otherwise, with `v_n` matched to `u_i`, the path and the two
/// walks `v_n u_i … u_1` and `v_n u_i … u_n` continue the cyclic sequence
/// `1, …, ℓ+1`, the edge at `v_1` continues it backwards, and each inner
/// matching edge `v_j u_{α(j)}` repeats the color of `v_{j-1} v_j`.
pub fn color_permutation_graph(
    graph: &Graph,
    ham_path: &[Vertex],
    alpha: &Permutation,
    ell: WindowParam,
) -> Result<ConstructionReport> {
    let n = graph.n();
    if n < 2 {
        return Err(Error::Precondition("permutation graph coloring needs n >= 2".into()));
    }
    if !is_hamiltonian_path(graph, ham_path) {
        return Err(Error::Precondition(format!(
            "{ham_path:?} is not a Hamiltonian path of the graph"
        )));
    }
    let pg = permutation_graph(graph, alpha)?;
    let mut pos = vec![0; n];
    for (j, &v) in ham_path.iter().enumerate() {
        pos[v] = j;
    }
    // Path positions, 0-based: v(j) = ham_path[j], u(j) its copy, and v(j)
    // is matched to u(matched[j]).
    let v = |j: usize| ham_path[j];
    let u = |j: usize| n + ham_path[j];
    let matched: Vec<usize> = (0..n).map(|j| pos[alpha.apply(v(j))]).collect();
    let period = ell.get() + 1;
    let cyc = |k: usize| (k - 1) % period + 1;

    let i = matched[n - 1];
    if i == 0 || i == n - 1 {
        let mut whole: Vec<Vertex> = ham_path.to_vec();
        if i == 0 {
            whole.extend((0..n).map(u));
        } else {
            whole.extend((0..n).rev().map(u));
        }
        let mut r = color_traceable(&pg, &whole, ell)?;
        r.theorem = Theorem::PermutationGraph;
        r.notes = "last vertex matched to an end: traceable".into();
        return Ok(r);
    }

    let id = |a: Vertex, b: Vertex| pg.edge_id(a, b).unwrap();
    let mut colors = vec![1; pg.m()];
    // Edge k (1-based) of the path is v(k-1) v(k).
    for k in 1..n {
        colors[id(v(k - 1), v(k))] = cyc(k);
    }
    colors[id(v(n - 1), u(i))] = cyc(n);
    for s in 1..=i {
        colors[id(u(i - s + 1), u(i - s))] = cyc(n + s);
    }
    for s in 1..n - i {
        colors[id(u(i + s - 1), u(i + s))] = cyc(n + s);
    }
    colors[id(u(matched[0]), v(0))] = period;
    for j in 1..n - 1 {
        colors[id(v(j), u(matched[j]))] = colors[id(v(j - 1), v(j))];
    }
    let report = ConstructionReport::new(
        colors,
        period,
        Theorem::PermutationGraph,
        format!("last vertex matched to inner copy position {}", i + 1),
    )?;
    ensure_verified(&pg, &report, ell)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn ell(l: usize) -> WindowParam {
        WindowParam::new(l).unwrap()
    }

    #[test]
    fn examples() {
        let p3 = generate(&Family::Path { n: 3 }).unwrap();
        let r = color_permutation_graph(&p3, &[0, 1, 2], &Permutation::identity(3), ell(2)).unwrap();
        assert!(r.notes.contains("traceable"));
        assert!(r.coloring.num_colors() <= 3);

        let p4 = generate(&Family::Path { n: 4 }).unwrap();
        let alpha = Permutation::from_one_indexed(&[2, 4, 1, 3]).unwrap();
        let r = color_permutation_graph(&p4, &[0, 1, 2, 3], &alpha, ell(2)).unwrap();
        assert!(r.notes.contains("inner"));
        assert!(r.coloring.num_colors() <= 3);
    }

    #[test]
    fn rejects_bad_inputs() {
        let p4 = generate(&Family::Path { n: 4 }).unwrap();
        let id = Permutation::identity(4);
        assert!(color_permutation_graph(&p4, &[0, 2, 1, 3], &id, ell(2)).is_err());
        assert!(color_permutation_graph(&p4, &[0, 1, 2, 3], &Permutation::identity(3), ell(2)).is_err());
    }
}
