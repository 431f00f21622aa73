//! Python bindings. Colorings cross the boundary as lists of ints in the
//! graph's edge order.

use std::time::Duration;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use pcc_core::construct as cons;
use pcc_core::exact::{self, BoundOutcome, ExactOutcome, SearchBudget};
use pcc_core::graph::{self as g, Color, Family};
use pcc_core::structure as st;
use pcc_core::verify as ver;
use pcc_core::{EdgeColoring, WindowParam};

fn err(e: pcc_core::Error) -> PyErr {
    match e {
        pcc_core::Error::Invariant(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn ell(l: usize) -> PyResult<WindowParam> {
    WindowParam::new(l).map_err(err)
}

fn seconds(s: Option<f64>) -> PyResult<Option<Duration>> {
    s.map(|s| Duration::try_from_secs_f64(s).map_err(|e| PyValueError::new_err(format!("bad time limit {s}: {e}"))))
        .transpose()
}

fn coloring(colors: Vec<Color>) -> PyResult<EdgeColoring> {
    EdgeColoring::from_colors(colors).map_err(err)
}

/// An immutable simple undirected graph on vertices `0..n`.
#[pyclass(frozen, module = "pcc")]
struct Graph(g::Graph);

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        g::Graph::new(n, edges).map(Graph).map_err(err)
    }

    /// A family graph. `family` uses the CLI names (`path`, `wheel`,
    /// `complete_bipartite`, `random_2connected`, ...).
    #[staticmethod]
    #[pyo3(signature = (family, n=None, m=None, t=None, parts=None, a=None, b=None, seed=0))]
    #[allow(clippy::too_many_arguments)]
    fn generate(
        family: &str,
        n: Option<usize>,
        m: Option<usize>,
        t: Option<usize>,
        parts: Option<Vec<usize>>,
        a: Option<usize>,
        b: Option<usize>,
        seed: u64,
    ) -> PyResult<Self> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| PyValueError::new_err(format!("{family} needs {name}")))
        };
        let spec = match family {
            "path" => Family::Path { n: need(n, "n")? },
            "cycle" => Family::Cycle { n: need(n, "n")? },
            "star" => Family::Star { n: need(n, "n")? },
            "wheel" => Family::Wheel { n: need(n, "n")? },
            "complete" => Family::Complete { n: need(n, "n")? },
            "complete_bipartite" => Family::CompleteBipartite {
                m: need(m, "m")?,
                n: need(n, "n")?,
            },
            "complete_multipartite" => Family::CompleteMultipartite {
                parts: parts.ok_or_else(|| PyValueError::new_err("complete_multipartite needs parts"))?,
            },
            "hypercube" => Family::Hypercube { t: need(t, "t")? },
            "double_star" => Family::DoubleStar {
                a: need(a, "a")?,
                b: need(b, "b")?,
            },
            "random_tree" => Family::RandomTree { n: need(n, "n")?, seed },
            "random_2connected" => {
                let n = need(n, "n")?;
                Family::Random2Connected {
                    n,
                    m: m.unwrap_or(n + n / 2),
                    seed,
                }
            }
            other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
        };
        g::generate(&spec).map(Graph).map_err(err)
    }

    /// Parses the edge-list text format.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        g::read_graph(text).map(Graph).map_err(err)
    }

    fn to_edge_list(&self) -> String {
        g::write_graph(&self.0)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.0.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.0.neighbors(v).collect())
    }

    fn join(&self, other: &Graph) -> Graph {
        Graph(g::join(&self.0, &other.0))
    }

    fn cartesian(&self, other: &Graph) -> Graph {
        Graph(g::cartesian_product(&self.0, &other.0))
    }

    /// `alpha` is a 1-indexed permutation of `[n]`.
    fn permutation_graph(&self, alpha: Vec<usize>) -> PyResult<Graph> {
        let alpha = g::Permutation::from_one_indexed(&alpha).map_err(err)?;
        g::permutation_graph(&self.0, &alpha).map(Graph).map_err(err)
    }

    fn coloring_text(&self, colors: Vec<Color>) -> PyResult<String> {
        let c = coloring(colors)?;
        c.check_against(&self.0).map_err(err)?;
        Ok(g::write_coloring(&self.0, &c))
    }

    fn read_coloring(&self, text: &str) -> PyResult<Vec<Color>> {
        g::read_coloring(text, &self.0).map(|c| c.colors().to_vec()).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.0.n(), self.0.m())
    }

    fn __eq__(&self, other: &Graph) -> bool {
        self.0 == other.0
    }
}

/// The output of a constructor.
#[pyclass(frozen, get_all, module = "pcc")]
struct Report {
    colors: Vec<Color>,
    claimed: usize,
    theorem: String,
    notes: String,
}

#[pymethods]
impl Report {
    #[getter]
    fn num_colors(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    fn __repr__(&self) -> String {
        format!(
            "Report(theorem={:?}, colors={}, claimed={})",
            self.theorem,
            self.num_colors(),
            self.claimed
        )
    }
}

fn report(r: pcc_core::Result<cons::ConstructionReport>) -> PyResult<Report> {
    let r = r.map_err(err)?;
    Ok(Report {
        colors: r.coloring.colors().to_vec(),
        claimed: r.claimed_colors,
        theorem: r.theorem.name().to_string(),
        notes: r.notes,
    })
}

/// `None` when every pair has `k` disjoint distance-ℓ proper paths, else the
/// first failing pair. Raises on per-pair timeout.
#[pyfunction]
#[pyo3(signature = (graph, colors, ell, k=1, pair_time_limit=None))]
fn verify(graph: &Graph, colors: Vec<Color>, ell: usize, k: usize, pair_time_limit: Option<f64>) -> PyResult<Option<(usize, usize)>> {
    let c = coloring(colors)?;
    let options = ver::VerifyOptions {
        pair_budget: seconds(pair_time_limit)?,
    };
    let cert = ver::verify_coloring_with(&graph.0, &c, self::ell(ell)?, k, &options).map_err(err)?;
    if cert.failing_pair.is_none() && !cert.timed_out.is_empty() {
        return Err(PyRuntimeError::new_err(format!("{} pair(s) timed out", cert.timed_out.len())));
    }
    Ok(cert.failing_pair)
}

#[pyfunction]
fn find_path(graph: &Graph, colors: Vec<Color>, u: usize, v: usize, ell: usize) -> PyResult<Option<Vec<usize>>> {
    ver::find_distance_proper_path(&graph.0, &coloring(colors)?, u, v, self::ell(ell)?).map_err(err)
}

#[pyfunction]
fn is_distance_proper(colors: Vec<Color>, ell: usize) -> PyResult<bool> {
    Ok(ver::colors_are_distance_proper(&colors, self::ell(ell)?))
}

fn budget(max_colors: usize, time_limit: Option<f64>, max_edges: usize) -> PyResult<SearchBudget> {
    Ok(SearchBudget::default()
        .with_max_colors(max_colors)
        .with_max_edges(max_edges)
        .with_time_limit(seconds(time_limit)?))
}

/// `(min_colors, witness)` or `None` when the budget runs out.
#[pyfunction]
#[pyo3(signature = (graph, ell, max_colors=8, time_limit=Some(60.0), max_edges=24))]
fn min_colors_exact(
    graph: &Graph,
    ell: usize,
    max_colors: usize,
    time_limit: Option<f64>,
    max_edges: usize,
) -> PyResult<Option<(usize, Vec<Color>)>> {
    let b = budget(max_colors, time_limit, max_edges)?;
    Ok(match exact::min_colors_exact(&graph.0, self::ell(ell)?, &b).map_err(err)? {
        ExactOutcome::Found(r) => Some((r.min_colors, r.witness.colors().to_vec())),
        ExactOutcome::Inconclusive { .. } => None,
    })
}

/// `True` if no coloring with at most `t` colors works, `False` if one
/// does, `None` if the budget runs out.
#[pyfunction]
#[pyo3(signature = (graph, ell, t, time_limit=Some(60.0), max_edges=24))]
fn prove_lower_bound(graph: &Graph, ell: usize, t: usize, time_limit: Option<f64>, max_edges: usize) -> PyResult<Option<bool>> {
    let b = budget(t.max(1), time_limit, max_edges)?;
    Ok(match exact::prove_lower_bound(&graph.0, self::ell(ell)?, t, &b).map_err(err)? {
        BoundOutcome::Proven => Some(true),
        BoundOutcome::Refuted(_) => Some(false),
        BoundOutcome::Inconclusive => None,
    })
}

#[pyfunction]
fn sigma2_prime(graph: &Graph) -> PyResult<usize> {
    st::sigma2_prime(&graph.0).map_err(err)
}

#[pyfunction]
fn radius(graph: &Graph) -> PyResult<usize> {
    st::radius(&graph.0).map_err(err)
}

#[pyfunction]
fn is_2_connected(graph: &Graph) -> bool {
    st::is_2_connected(&graph.0)
}

#[pyfunction]
fn hamiltonian_path(graph: &Graph) -> Option<Vec<usize>> {
    st::hamiltonian_path(&graph.0)
}

/// `(base_cycle, ears)`.
#[pyfunction]
fn ear_decomposition(graph: &Graph) -> PyResult<(Vec<usize>, Vec<Vec<usize>>)> {
    let d = st::ear_decomposition(&graph.0).map_err(err)?;
    Ok((d.base_cycle, d.ears))
}

/// Vertices of a largest subtree with diameter at most `d`.
#[pyfunction]
fn max_subtree_with_diameter(tree: &Graph, d: usize) -> PyResult<Vec<usize>> {
    st::max_subtree_size_with_diameter(&tree.0, d)
        .map(|s| s.vertices)
        .map_err(err)
}

#[pyfunction]
fn balanced_split(parts: Vec<usize>) -> Option<usize> {
    cons::balanced_split(&parts)
}

#[pyfunction]
fn color_traceable(graph: &Graph, ham_path: Vec<usize>, ell: usize) -> PyResult<Report> {
    report(cons::color_traceable(&graph.0, &ham_path, self::ell(ell)?))
}

#[pyfunction]
fn color_tree(tree: &Graph, ell: usize) -> PyResult<Report> {
    report(cons::color_tree(&tree.0, self::ell(ell)?))
}

#[pyfunction]
fn color_complete_bipartite(m: usize, n: usize, ell: usize) -> PyResult<Report> {
    report(cons::color_complete_bipartite(m, n, self::ell(ell)?))
}

#[pyfunction]
#[pyo3(signature = (parts, ell=2))]
fn color_complete_multipartite(parts: Vec<usize>, ell: usize) -> PyResult<Report> {
    report(cons::color_complete_multipartite(&parts, self::ell(ell)?))
}

#[pyfunction]
#[pyo3(signature = (n, ell=2))]
fn color_wheel(n: usize, ell: usize) -> PyResult<Report> {
    report(cons::color_wheel(n, self::ell(ell)?))
}

#[pyfunction]
fn color_hypercube(t: usize, ell: usize) -> PyResult<Report> {
    report(cons::color_hypercube(t, self::ell(ell)?))
}

#[pyfunction]
fn color_2connected(graph: &Graph) -> PyResult<Report> {
    report(cons::color_2connected(&graph.0))
}

/// Colors `g.join(h)`.
#[pyfunction]
fn color_join(g: &Graph, h: &Graph) -> PyResult<Report> {
    report(cons::color_join(&g.0, &h.0))
}

/// Colors `g.cartesian(h)`.
#[pyfunction]
fn color_cartesian(g: &Graph, h: &Graph) -> PyResult<Report> {
    report(cons::color_cartesian(&g.0, &h.0))
}

/// Colors `graph.permutation_graph(alpha)`.
#[pyfunction]
fn color_permutation_graph(graph: &Graph, ham_path: Vec<usize>, alpha: Vec<usize>, ell: usize) -> PyResult<Report> {
    let alpha = g::Permutation::from_one_indexed(&alpha).map_err(err)?;
    report(cons::color_permutation_graph(&graph.0, &ham_path, &alpha, self::ell(ell)?))
}

#[pymodule]
fn pcc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Report>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(find_path, m)?)?;
    m.add_function(wrap_pyfunction!(is_distance_proper, m)?)?;
    m.add_function(wrap_pyfunction!(min_colors_exact, m)?)?;
    m.add_function(wrap_pyfunction!(prove_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(sigma2_prime, m)?)?;
    m.add_function(wrap_pyfunction!(radius, m)?)?;
    m.add_function(wrap_pyfunction!(is_2_connected, m)?)?;
    m.add_function(wrap_pyfunction!(hamiltonian_path, m)?)?;
    m.add_function(wrap_pyfunction!(ear_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(max_subtree_with_diameter, m)?)?;
    m.add_function(wrap_pyfunction!(balanced_split, m)?)?;
    m.add_function(wrap_pyfunction!(color_traceable, m)?)?;
    m.add_function(wrap_pyfunction!(color_tree, m)?)?;
    m.add_function(wrap_pyfunction!(color_complete_bipartite, m)?)?;
    m.add_function(wrap_pyfunction!(color_complete_multipartite, m)?)?;
    m.add_function(wrap_pyfunction!(color_wheel, m)?)?;
    m.add_function(wrap_pyfunction!(color_hypercube, m)?)?;
    m.add_function(wrap_pyfunction!(color_2connected, m)?)?;
    m.add_function(wrap_pyfunction!(color_join, m)?)?;
    m.add_function(wrap_pyfunction!(color_cartesian, m)?)?;
    m.add_function(wrap_pyfunction!(color_permutation_graph, m)?)?;
    Ok(())
}
